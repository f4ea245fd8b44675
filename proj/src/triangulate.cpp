#include "polyvert/triangulate.hpp"

#include <algorithm>

namespace polyvert {

Rat simplex_det(const Simplex& s) {
  if (s.empty()) fail(ErrKind::degenerate, "empty simplex");
  size_t d = s[0].size();
  if (s.size() != d + 1) fail(ErrKind::degenerate, "simplex with wrong vertex count");
  Mat m;
  for (size_t i = 1; i <= d; ++i) m.push_back(vec_sub(s[i], s[0]));
  return rat_abs(det(std::move(m)));
}

namespace {

std::vector<Simplex> triangulate_by_vertices(size_t dim, const std::vector<Vec>& verts);

// Triangulates conv(verts) (full-dimensional in R^dim) by pulling from the
// lex-least vertex over the facets that miss it.
std::vector<Simplex> triangulate_by_vertices(size_t dim, const std::vector<Vec>& verts) {
  if (dim == 0) return {Simplex{verts.at(0)}};
  if (dim == 1) {
    Vec lo = verts[0], hi = verts[0];
    for (const Vec& v : verts) {
      if (lex_less(v, lo)) lo = v;
      if (lex_less(hi, v)) hi = v;
    }
    if (lo == hi) fail(ErrKind::degenerate, "triangulate: degenerate segment");
    return {Simplex{lo, hi}};
  }
  GeneratorSet g;
  g.points = verts;
  std::vector<Halfspace> facets = vrep_to_hrep(dim, g);
  auto canon = hrep_to_vrep(dim, facets);
  if (!canon || !canon->lines.empty() || !canon->rays.empty())
    fail(ErrKind::internal, "triangulate: expected a polytope");
  std::vector<Vec> vs = sorted_unique(canon->points);
  const Vec& v0 = vs.front();

  std::vector<Simplex> out;
  for (const Halfspace& h : facets) {
    if (dot(h.normal, v0) == h.offset) continue;  // facet contains the apex
    std::vector<Vec> on_facet;
    for (const Vec& v : vs)
      if (dot(h.normal, v) == h.offset) on_facet.push_back(v);
    if (on_facet.empty()) fail(ErrKind::internal, "facet with no vertices");
    Chart chart = make_chart(make_hyperplane(h.normal, h.offset));
    std::vector<Vec> down;
    for (const Vec& v : on_facet) down.push_back(chart.to_chart(v));
    for (const Simplex& s : triangulate_by_vertices(dim - 1, down)) {
      Simplex lifted{v0};
      for (const Vec& u : s) lifted.push_back(chart.to_ambient(u));
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

}  // namespace

std::vector<Simplex> triangulate_polytope(const ConvexPolyhedron& p) {
  if (p.is_empty()) return {};
  if (!p.bounded()) fail(ErrKind::unbounded, "triangulate_polytope: unbounded input");
  if (p.affine_dim() != static_cast<int>(p.dim()))
    fail(ErrKind::low_dimensional, "triangulate_polytope: not full-dimensional");
  return triangulate_by_vertices(p.dim(), p.vrep().points);
}

ConeTriangulation triangulate_cone(const Cone& c0) {
  Cone c = canonicalize_cone(c0);
  size_t d = c.dim();
  ConeTriangulation out;
  if (!c.lineality.empty()) {
    out.line_cone = true;
    out.pieces = {c};
    return out;
  }
  if (cone_dim(c) < d) {
    out.degenerate = true;
    return out;
  }
  if (c.generators.size() == d) {
    out.pieces = {c};
    return out;
  }
  // Transversal hyperplane: w with <w, g> > 0 for every generator, taken
  // from the interior of the dual cone (negated).
  Cone dual = dual_cone(c);
  Vec w = zero_vec(d);
  for (const Vec& r : dual.generators) w = vec_add(w, r);
  w = vec_neg(w);
  for (const Vec& g : c.generators)
    if (dot(w, g) <= 0) fail(ErrKind::internal, "transversal direction failed");

  Chart chart = make_chart(make_hyperplane(w, Rat(1)));
  std::vector<Vec> slice;
  for (const Vec& g : c.generators) slice.push_back(chart.to_chart(vec_scale(Rat(1) / dot(w, g), g)));
  for (const Simplex& s : triangulate_by_vertices(d - 1, slice)) {
    Cone piece;
    piece.apex = c.apex;
    for (const Vec& u : s) piece.generators.push_back(primitive_direction(chart.to_ambient(u)));
    std::sort(piece.generators.begin(), piece.generators.end(), lex_less);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace polyvert
