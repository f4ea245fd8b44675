#include "polyvert/arrangement.hpp"

#include <algorithm>

namespace polyvert {

namespace {

Vec witness_of(const GeneratorSet& g) {
  if (g.empty()) fail(ErrKind::internal, "witness of empty cell");
  size_t d = g.points[0].size();
  Vec x = zero_vec(d);
  for (const Vec& p : g.points) x = vec_add(x, p);
  x = vec_scale(Rat(1) / Rat(static_cast<int>(g.points.size())), x);
  for (const Vec& r : g.rays) x = vec_add(x, r);
  return x;
}

}  // namespace

Halfspace side_halfspace(const OrientedHyperplane& h, int s) {
  // s * (<n,x> - b) >= 0  <=>  <-s n, x> <= -s b
  Rat sr(s);
  return Halfspace{vec_scale(-sr, h.normal), -sr * h.offset};
}

std::vector<OrientedHyperplane> normalize_planes(std::vector<OrientedHyperplane> planes) {
  std::sort(planes.begin(), planes.end(), hyperplane_less);
  planes.erase(std::unique(planes.begin(), planes.end(),
                           [](const OrientedHyperplane& a, const OrientedHyperplane& b) {
                             return a.same_unoriented(b);
                           }),
               planes.end());
  return planes;
}

int Arrangement::find_cell(const std::vector<int>& signs) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), signs,
                             [](const ArrangementCell& c, const std::vector<int>& s) {
                               return c.signs < s;
                             });
  if (it == cells.end() || it->signs != signs) return -1;
  return static_cast<int>(it - cells.begin());
}

std::vector<Halfspace> Arrangement::cell_halfspaces(size_t i) const {
  std::vector<Halfspace> hs;
  const ArrangementCell& c = cells[i];
  for (size_t k = 0; k < planes.size(); ++k) hs.push_back(side_halfspace(planes[k], c.signs[k]));
  return hs;
}

ConvexPolyhedron Arrangement::cell_polyhedron(size_t i) const {
  ConvexPolyhedron p = ConvexPolyhedron::from_generators(dim, cells[i].gens);
  return p;
}

Arrangement build_arrangement(size_t dim, std::vector<OrientedHyperplane> planes) {
  Arrangement arr;
  arr.dim = dim;
  arr.planes = normalize_planes(std::move(planes));

  ArrangementCell whole;
  whole.gens.points.push_back(zero_vec(dim));
  for (size_t i = 0; i < dim; ++i) whole.gens.lines.push_back(unit_vec(dim, i));
  whole.witness = zero_vec(dim);
  arr.cells.push_back(std::move(whole));

  for (size_t k = 0; k < arr.planes.size(); ++k) {
    const OrientedHyperplane& h = arr.planes[k];
    std::vector<ArrangementCell> next;
    next.reserve(arr.cells.size() + 8);
    for (ArrangementCell& cell : arr.cells) {
      bool pos = false, neg = false;
      for (const Vec& p : cell.gens.points) {
        int s = sign_of(h.eval(p));
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      for (const Vec& r : cell.gens.rays) {
        int s = sign_of(dot(h.normal, r));
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      for (const Vec& l : cell.gens.lines) {
        if (dot(h.normal, l) != 0) pos = neg = true;
      }
      if (!pos && !neg) fail(ErrKind::internal, "arrangement cell contained in a hyperplane");
      if (pos != neg) {
        cell.signs.push_back(pos ? 1 : -1);
        next.push_back(std::move(cell));
        continue;
      }
      for (int s : {1, -1}) {
        ArrangementCell child;
        child.signs = cell.signs;
        child.signs.push_back(s);
        child.gens = clip_generators(cell.gens, side_halfspace(h, s));
        if (child.gens.empty()) fail(ErrKind::internal, "split produced an empty cell");
        std::vector<Halfspace> active;
        for (size_t j = 0; j <= k; ++j) active.push_back(side_halfspace(arr.planes[j], child.signs[j]));
        reduce_generators(child.gens, active);
        child.witness = witness_of(child.gens);
        next.push_back(std::move(child));
      }
    }
    arr.cells = std::move(next);
  }
  for (ArrangementCell& c : arr.cells)
    if (c.witness.empty() && dim > 0) c.witness = witness_of(c.gens);
  std::sort(arr.cells.begin(), arr.cells.end(),
            [](const ArrangementCell& a, const ArrangementCell& b) { return a.signs < b.signs; });
  return arr;
}

std::vector<Vec> arrangement_vertices(size_t dim, const std::vector<OrientedHyperplane>& planes) {
  std::vector<OrientedHyperplane> ps = normalize_planes(planes);
  size_t n = ps.size();
  std::vector<Vec> out;
  if (dim == 0 || n < dim) return out;
  // iterate over all d-subsets of the planes
  std::vector<size_t> c(dim);
  for (size_t i = 0; i < dim; ++i) c[i] = i;
  while (true) {
    Mat a(dim, Vec(dim));
    Vec b(dim);
    for (size_t i = 0; i < dim; ++i) {
      a[i] = ps[c[i]].normal;
      b[i] = ps[c[i]].offset;
    }
    if (det(a) != 0) {
      auto x = solve(a, b);
      if (x) out.push_back(*x);
    }
    // next combination
    size_t i = dim;
    while (i > 0) {
      --i;
      if (c[i] != i + n - dim) {
        ++c[i];
        for (size_t j = i + 1; j < dim; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return sorted_unique(std::move(out));
    }
  }
}

}  // namespace polyvert
