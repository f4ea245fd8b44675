// Oriented hyperplanes with a canonical unoriented form, plus rational
// affine charts used to work inside a hyperplane in one dimension less.
#pragma once

#include "polyvert/linalg.hpp"
#include "polyvert/rational.hpp"

#include <vector>

namespace polyvert {

// { x : <normal, x> = offset }, stored canonically: the first nonzero entry
// of `normal` is 1.  `orient` in {+1, -1} selects the positive side,
//   positive side = { x : orient * (<normal, x> - offset) > 0 },
// so flipping orientation never touches the canonical key.
struct OrientedHyperplane {
  Vec normal;
  Rat offset;
  int orient = 1;

  size_t dim() const { return normal.size(); }

  // Signed evaluation against the canonical (unoriented) equation.
  Rat eval(const Vec& x) const { return dot(normal, x) - offset; }

  // Sign of x relative to the oriented positive side.
  int side(const Vec& x) const { return orient * sign_of(eval(x)); }

  // Normal pointing into the positive side.
  Vec oriented_normal() const { return orient == 1 ? normal : vec_neg(normal); }

  OrientedHyperplane flipped() const { return {normal, offset, -orient}; }

  bool same_unoriented(const OrientedHyperplane& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

// Canonicalizes an arbitrary nonzero (normal, offset) pair; `positive_side`
// of the input is preserved through the orientation bit.
OrientedHyperplane make_hyperplane(const Vec& normal, const Rat& offset);

// Deterministic order on unoriented canonical forms (normal, then offset).
bool hyperplane_less(const OrientedHyperplane& a, const OrientedHyperplane& b);

// Rational affine chart of a hyperplane: the bijection
//   R^{d-1} -> h,  u |-> base + T u,
// with T's columns a kernel basis of the normal.  Everything is exact, so
// geometry can be pushed down into the hyperplane and lifted back.
struct Chart {
  Vec base;                 // a point on the hyperplane
  std::vector<Vec> tangent; // d-1 independent tangent vectors (columns of T)

  size_t ambient_dim() const { return base.size(); }
  size_t chart_dim() const { return tangent.size(); }

  Vec to_ambient(const Vec& u) const;
  // Requires y on the hyperplane (affine hull of the chart).
  Vec to_chart(const Vec& y) const;
};

Chart make_chart(const OrientedHyperplane& h);

// Restriction of a hyperplane g to the chart of another hyperplane:
// normal T^t m, offset c - <m, base>.  Returns false when g's restriction
// is degenerate (g contains or is parallel to the chart's hyperplane).
bool pull_back_hyperplane(const Chart& chart, const Vec& m, const Rat& c, Vec& normal_out,
                          Rat& offset_out);

}  // namespace polyvert
