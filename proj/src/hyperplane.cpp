#include "polyvert/hyperplane.hpp"

namespace polyvert {

OrientedHyperplane make_hyperplane(const Vec& normal, const Rat& offset) {
  size_t k = 0;
  while (k < normal.size() && normal[k] == 0) ++k;
  if (k == normal.size()) fail(ErrKind::degenerate, "hyperplane with zero normal");
  Rat lead = normal[k];
  OrientedHyperplane h;
  h.normal = vec_scale(Rat(1) / lead, normal);
  h.offset = offset / lead;
  h.orient = lead > 0 ? 1 : -1;
  return h;
}

bool hyperplane_less(const OrientedHyperplane& a, const OrientedHyperplane& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

Vec Chart::to_ambient(const Vec& u) const {
  if (u.size() != tangent.size()) fail(ErrKind::dimension_mismatch, "chart: bad chart point");
  Vec y = base;
  for (size_t j = 0; j < tangent.size(); ++j)
    if (u[j] != 0) y = vec_add(y, vec_scale(u[j], tangent[j]));
  return y;
}

Vec Chart::to_chart(const Vec& y) const {
  // solve sum_j u_j tangent[j] = y - base (columns are independent)
  size_t d = base.size(), k = tangent.size();
  Mat a(d, Vec(k));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = tangent[j][i];
  auto u = solve(a, vec_sub(y, base));
  if (!u) fail(ErrKind::internal, "chart: point not on hyperplane");
  return *u;
}

Chart make_chart(const OrientedHyperplane& h) {
  Chart c;
  size_t d = h.dim();
  size_t k = 0;
  while (k < d && h.normal[k] == 0) ++k;
  c.base = zero_vec(d);
  c.base[k] = h.offset / h.normal[k];
  c.tangent = kernel_basis(Mat{h.normal}, d);
  if (c.tangent.size() != d - 1) fail(ErrKind::internal, "chart: bad tangent basis");
  return c;
}

bool pull_back_hyperplane(const Chart& chart, const Vec& m, const Rat& c, Vec& normal_out,
                          Rat& offset_out) {
  size_t k = chart.chart_dim();
  Vec n(k);
  bool nonzero = false;
  for (size_t j = 0; j < k; ++j) {
    n[j] = dot(m, chart.tangent[j]);
    nonzero = nonzero || n[j] != 0;
  }
  if (!nonzero) return false;
  normal_out = std::move(n);
  offset_out = c - dot(m, chart.base);
  return true;
}

}  // namespace polyvert
