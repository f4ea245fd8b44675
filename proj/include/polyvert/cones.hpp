// Polyhedral cones with apex, tangent cones of polyhedral functions,
// Brianchon-Gram expansion, and the star-reduction rewriting used to clear
// non-algebraic vertices.
#pragma once

#include "polyvert/polyfun.hpp"
#include "polyvert/polyhedron.hpp"

#include <vector>

namespace polyvert {

// apex + cone(generators) + span(lineality).  Canonical form: generators
// primitive, extreme and lex-sorted; lineality a rref basis.
struct Cone {
  Vec apex;
  std::vector<Vec> generators;
  std::vector<Vec> lineality;

  size_t dim() const { return apex.size(); }
};

Cone canonicalize_cone(const Cone& c);

// Linear dimension of the cone's direction space.
size_t cone_dim(const Cone& c);

// Nontrivial lineality after canonicalization (full space counts).
bool is_line_cone(const Cone& c);

// Polar dual of the direction cone: { z : <z, w> <= 0 for all directions w }.
// The apex of the result is the origin.
Cone dual_cone(const Cone& c);

ConvexPolyhedron cone_to_polyhedron(const Cone& c);

// Tangent cone of a convex polyhedron at a point of it: drop the
// constraints inactive at v and keep the active ones as a cone at v.
Cone tangent_cone_of_polyhedron(const ConvexPolyhedron& p, const Vec& v);

// Weighted cones with a common apex; the local model of a polyhedral
// function near a point.
struct WeightedCone {
  Rat weight;
  Cone cone;
};

struct PolyconicalFunction {
  size_t dim = 0;
  Vec apex;
  std::vector<WeightedCone> terms;

  bool is_zero() const { return terms.empty(); }
};

// Local cone structure of f at v: one weighted cone per cell whose closure
// contains v.  Empty when v is outside the support closure.
PolyconicalFunction tangent_cone(const PolyhedralFunction& f, const Vec& v);

// View a polyconical function as a polyhedral function (for sections etc).
PolyhedralFunction polyconical_to_function(const PolyconicalFunction& g);

// Brianchon-Gram expansion.  For a pointed polyhedron,
//   [p] = sum over bounded faces F of (-1)^dim(F) [tcone(p, F)];
// for a polyhedron with lineality L the expansion is computed in the
// quotient by L and every term carries L in its lineality (so all terms
// are line-cones).  Bounded inputs recover the classical identity over
// all faces.
struct BGTerm {
  int sign;  // (-1)^dim(face)
  Cone cone;
  int face_dim;
  Vec face_witness;
};
std::vector<BGTerm> brianchon_gram(const ConvexPolyhedron& p);

// Star reduction of a simplicial cone along a direction v with
// <v, w> != 0 for every generator w (otherwise DirectionNotGeneric):
//   [c] = sign * [star] + sum_i line_signs[i] * [line_cones[i]],
// where `star` is c with every generator flipped into <v, w> > 0, and one
// line-cone is emitted per flip.
struct StarReduction {
  int sign;  // (-1)^{number of flips}
  Cone star;
  std::vector<std::pair<int, Cone>> line_cones;  // (sign, line-cone)
};
StarReduction star_reduction(const Cone& c, const Vec& v);

}  // namespace polyvert
