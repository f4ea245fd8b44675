#include "polyvert/linalg.hpp"

namespace polyvert {

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrKind::dimension_mismatch, "solve: row count mismatch");
  if (a.empty()) return Vec{};
  size_t cols = a[0].size();
  Mat aug = a;
  for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
  Vec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<Vec> kernel_basis(const Mat& a, size_t cols) {
  Mat m = a;
  for (auto& row : m)
    if (row.size() != cols) fail(ErrKind::dimension_mismatch, "kernel_basis: column mismatch");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat det(Mat m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) fail(ErrKind::dimension_mismatch, "det: not square");
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[c], m[p]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

bool in_span(const std::vector<Vec>& rows, const Vec& v) {
  Mat m(rows.begin(), rows.end());
  size_t r0 = rank(m);
  m.push_back(v);
  return rank(std::move(m)) == r0;
}

}  // namespace polyvert
