// Exact triangulation of full-dimensional polytopes (pulling from the
// lex-least vertex) and of pointed cones (through a transversal slice).
#pragma once

#include "polyvert/cones.hpp"
#include "polyvert/polyhedron.hpp"

#include <vector>

namespace polyvert {

// d+1 affinely independent points in R^d.
using Simplex = std::vector<Vec>;

// Signed volume factor |det(v_1 - v_0, ..., v_d - v_0)| (d! times volume).
Rat simplex_det(const Simplex& s);

// Requires a bounded polyhedron of full affine dimension.  The pieces have
// pairwise disjoint interiors and cover the polytope.
std::vector<Simplex> triangulate_polytope(const ConvexPolyhedron& p);

struct ConeTriangulation {
  bool line_cone = false;   // nontrivial lineality: left unsubdivided
  bool degenerate = false;  // direction space of deficient dimension
  std::vector<Cone> pieces; // simplicial, full-dimensional, common apex
};

ConeTriangulation triangulate_cone(const Cone& c);

}  // namespace polyvert
