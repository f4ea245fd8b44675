// Hyperplane arrangements: the full-dimensional cells with exact sign
// vectors, relative-interior witnesses, and generator sets, built by
// inserting one hyperplane at a time and splitting the cells it crosses.
#pragma once

#include "polyvert/hyperplane.hpp"
#include "polyvert/polyhedron.hpp"

#include <map>
#include <vector>

namespace polyvert {

struct ArrangementCell {
  std::vector<int> signs;  // one per hyperplane, +1 / -1 vs canonical eval
  GeneratorSet gens;
  Vec witness;  // interior point: mean of points plus sum of rays
};

struct Arrangement {
  size_t dim = 0;
  std::vector<OrientedHyperplane> planes;  // canonical, sorted, unique
  std::vector<ArrangementCell> cells;      // sorted by sign vector

  // Index of the cell with the given sign vector, or -1.
  int find_cell(const std::vector<int>& signs) const;

  ConvexPolyhedron cell_polyhedron(size_t i) const;
  std::vector<Halfspace> cell_halfspaces(size_t i) const;
};

// `planes` are canonicalized, sorted and deduplicated (orientation bits are
// irrelevant here and preserved as given after dedup).
Arrangement build_arrangement(size_t dim, std::vector<OrientedHyperplane> planes);

// The 0-faces of the arrangement: intersection points of every subset of
// d hyperplanes with independent normals.
std::vector<Vec> arrangement_vertices(size_t dim, const std::vector<OrientedHyperplane>& planes);

// Canonical plane list helper: canonicalize, sort, dedupe unoriented keys.
std::vector<OrientedHyperplane> normalize_planes(std::vector<OrientedHyperplane> planes);

// Halfspace for "sign s side of plane h": s*(eval) >= 0.
Halfspace side_halfspace(const OrientedHyperplane& h, int s);

}  // namespace polyvert
