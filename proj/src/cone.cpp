#include "polyvert/cones.hpp"

#include <algorithm>

namespace polyvert {

namespace {

GeneratorSet direction_generators(const Cone& c) {
  GeneratorSet g;
  g.points.push_back(zero_vec(c.dim()));
  g.rays = c.generators;
  g.lines = c.lineality;
  return g;
}

}  // namespace

Cone canonicalize_cone(const Cone& c) {
  GeneratorSet g = direction_generators(c);
  std::vector<Halfspace> hs = vrep_to_hrep(c.dim(), g);
  reduce_generators(g, hs);
  Cone out;
  out.apex = c.apex;
  out.generators = sorted_unique(std::move(g.rays));
  out.lineality = g.lines;
  return out;
}

size_t cone_dim(const Cone& c) {
  std::vector<Vec> span = c.generators;
  span.insert(span.end(), c.lineality.begin(), c.lineality.end());
  return rank_of(span);
}

bool is_line_cone(const Cone& c) { return !canonicalize_cone(c).lineality.empty(); }

Cone dual_cone(const Cone& c) {
  std::vector<Halfspace> hs;
  for (const Vec& w : c.generators) hs.push_back(Halfspace{w, Rat(0)});
  for (const Vec& l : c.lineality) {
    hs.push_back(Halfspace{l, Rat(0)});
    hs.push_back(Halfspace{vec_neg(l), Rat(0)});
  }
  auto g = hrep_to_vrep(c.dim(), hs);
  if (!g) fail(ErrKind::internal, "dual cone cannot be empty");
  Cone out;
  out.apex = zero_vec(c.dim());
  out.generators = sorted_unique(std::move(g->rays));
  out.lineality = g->lines;
  return out;
}

ConvexPolyhedron cone_to_polyhedron(const Cone& c) {
  GeneratorSet g;
  g.points.push_back(c.apex);
  g.rays = c.generators;
  g.lines = c.lineality;
  return ConvexPolyhedron::from_generators(c.dim(), std::move(g));
}

Cone tangent_cone_of_polyhedron(const ConvexPolyhedron& p, const Vec& v) {
  if (!p.contains(v)) fail(ErrKind::degenerate, "tangent cone at a point outside the polyhedron");
  std::vector<Halfspace> active;
  for (const Halfspace& h : p.hrep())
    if (dot(h.normal, v) == h.offset) active.push_back(Halfspace{h.normal, Rat(0)});
  auto g = hrep_to_vrep(p.dim(), active);
  if (!g) fail(ErrKind::internal, "tangent cone cannot be empty");
  Cone out;
  out.apex = v;
  out.generators = sorted_unique(std::move(g->rays));
  out.lineality = g->lines;
  return out;
}

StarReduction star_reduction(const Cone& c, const Vec& v) {
  size_t d = c.dim();
  if (v.size() != d) fail(ErrKind::dimension_mismatch, "star_reduction: direction dimension");
  if (!c.lineality.empty() || c.generators.size() != d)
    fail(ErrKind::degenerate, "star_reduction expects a simplicial cone");
  {
    Mat m(c.generators.begin(), c.generators.end());
    if (det(m) == 0) fail(ErrKind::degenerate, "star_reduction expects independent generators");
  }
  for (const Vec& w : c.generators)
    if (dot(v, w) == 0)
      fail(ErrKind::direction_not_generic,
           "star_reduction: direction orthogonal to generator " + vec_to_string(w));

  StarReduction out;
  out.sign = 1;
  std::vector<Vec> cur = c.generators;
  int flips = 0;
  for (size_t j = 0; j < d; ++j) {
    if (dot(v, cur[j]) > 0) continue;
    // [cur] = [line-cone with +-w_j] - [cur with w_j flipped]
    Cone line;
    line.apex = c.apex;
    line.generators = cur;
    line.generators.push_back(vec_neg(cur[j]));
    int line_sign = (flips % 2 == 0) ? 1 : -1;  // (-1)^{previous flips}
    out.line_cones.emplace_back(line_sign, canonicalize_cone(line));
    cur[j] = vec_neg(cur[j]);
    ++flips;
  }
  out.sign = flips % 2 == 0 ? 1 : -1;
  out.star.apex = c.apex;
  out.star.generators = std::move(cur);
  return out;
}

}  // namespace polyvert
