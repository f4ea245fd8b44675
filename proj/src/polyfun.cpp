#include "polyvert/polyfun.hpp"

#include <algorithm>
#include <numeric>

namespace polyvert {

bool PolyhedralFunction::integer_weights() const {
  for (const FunCell& c : cells)
    if (!is_integer(c.weight)) return false;
  return true;
}

PolyhedralFunction zero_function(size_t dim) {
  PolyhedralFunction f;
  f.dim = dim;
  return f;
}

PolyhedralFunction assemble_function(const Arrangement& arr, const std::vector<Rat>& cell_weights) {
  if (cell_weights.size() != arr.cells.size())
    fail(ErrKind::internal, "assemble_function: weight count mismatch");
  PolyhedralFunction f;
  f.dim = arr.dim;
  f.planes = arr.planes;
  for (size_t i = 0; i < arr.cells.size(); ++i) {
    if (cell_weights[i] == 0) continue;
    f.cells.push_back(FunCell{arr.cells[i].signs, cell_weights[i], arr.cells[i].witness,
                              arr.cells[i].gens});
  }
  return f;
}

namespace {

// Binary search over the sign-sorted cell list.
const FunCell* find_fun_cell(const PolyhedralFunction& f, const std::vector<int>& signs) {
  auto it = std::lower_bound(
      f.cells.begin(), f.cells.end(), signs,
      [](const FunCell& c, const std::vector<int>& s) { return c.signs < s; });
  if (it == f.cells.end() || it->signs != signs) return nullptr;
  return &*it;
}

std::vector<int> interior_signs(const PolyhedralFunction& f, const Vec& x) {
  std::vector<int> signs(f.planes.size());
  for (size_t i = 0; i < f.planes.size(); ++i) {
    signs[i] = sign_of(f.planes[i].eval(x));
    if (signs[i] == 0) fail(ErrKind::internal, "point lies on a generating hyperplane");
  }
  return signs;
}

// Sign of lim_{eps->0+} (<n, y + eps*dir> - b): lexicographic in (value at
// y, derivative along dir).  Zero only if y is on the plane and dir is
// tangent to it.
int lex_sign(const OrientedHyperplane& g, const Vec& y, const Vec& dir) {
  int s = sign_of(g.eval(y));
  if (s != 0) return s;
  return sign_of(dot(g.normal, dir));
}

Rat lex_limit_weight(const PolyhedralFunction& f, const Vec& y, const Vec& dir) {
  std::vector<int> signs(f.planes.size());
  for (size_t i = 0; i < f.planes.size(); ++i) {
    signs[i] = lex_sign(f.planes[i], y, dir);
    if (signs[i] == 0)
      fail(ErrKind::internal, "one-sided limit direction tangent to a generating hyperplane");
  }
  const FunCell* c = find_fun_cell(f, signs);
  return c ? c->weight : Rat(0);
}

}  // namespace

Rat weight_at_interior(const PolyhedralFunction& f, const Vec& x) {
  const FunCell* c = find_fun_cell(f, interior_signs(f, x));
  return c ? c->weight : Rat(0);
}

PolyhedralFunction from_weighted_union(
    size_t dim, const std::vector<std::pair<Rat, ConvexPolyhedron>>& pieces) {
  std::vector<OrientedHyperplane> planes;
  std::vector<std::pair<Rat, std::vector<Halfspace>>> active;  // full-dim pieces
  for (const auto& [coeff, piece] : pieces) {
    if (piece.dim() != dim) fail(ErrKind::dimension_mismatch, "piece of wrong dimension");
    if (coeff == 0 || piece.is_empty()) continue;
    if (piece.affine_dim() < static_cast<int>(dim)) continue;  // measure zero
    std::vector<Halfspace> facets = piece.facet_halfspaces();
    for (const Halfspace& h : facets) planes.push_back(make_hyperplane(h.normal, h.offset));
    active.emplace_back(coeff, std::move(facets));
  }
  Arrangement arr = build_arrangement(dim, std::move(planes));
  std::vector<Rat> weights(arr.cells.size(), Rat(0));
  for (size_t i = 0; i < arr.cells.size(); ++i) {
    const Vec& w = arr.cells[i].witness;
    for (const auto& [coeff, hs] : active) {
      bool inside = true;
      for (const Halfspace& h : hs)
        if (!h.admits(w)) {
          inside = false;
          break;
        }
      if (inside) weights[i] += coeff;
    }
  }
  return assemble_function(arr, weights);
}

PolyhedralFunction combine(const PolyhedralFunction& f, const PolyhedralFunction& g, const Rat& c) {
  if (f.dim != g.dim) fail(ErrKind::dimension_mismatch, "combine: dimension mismatch");
  std::vector<OrientedHyperplane> planes = f.planes;
  planes.insert(planes.end(), g.planes.begin(), g.planes.end());
  Arrangement arr = build_arrangement(f.dim, std::move(planes));
  std::vector<Rat> weights(arr.cells.size());
  for (size_t i = 0; i < arr.cells.size(); ++i) {
    const Vec& w = arr.cells[i].witness;
    weights[i] = weight_at_interior(f, w) + c * weight_at_interior(g, w);
  }
  return assemble_function(arr, weights);
}

PolyhedralFunction scale(const PolyhedralFunction& f, const Rat& c) {
  if (c == 0) return zero_function(f.dim);
  PolyhedralFunction out = f;
  for (FunCell& cell : out.cells) cell.weight *= c;
  return out;
}

bool ae_equal(const PolyhedralFunction& f, const PolyhedralFunction& g) {
  if (f.dim != g.dim) fail(ErrKind::dimension_mismatch, "ae_equal: dimension mismatch");
  std::vector<OrientedHyperplane> planes = f.planes;
  planes.insert(planes.end(), g.planes.begin(), g.planes.end());
  Arrangement arr = build_arrangement(f.dim, std::move(planes));
  for (const ArrangementCell& cell : arr.cells)
    if (weight_at_interior(f, cell.witness) != weight_at_interior(g, cell.witness)) return false;
  return true;
}

EvalResult evaluate(const PolyhedralFunction& f, const Vec& x) {
  if (x.size() != f.dim) fail(ErrKind::dimension_mismatch, "evaluate: wrong dimension");
  EvalResult res;
  std::vector<int> signs(f.planes.size());
  std::vector<size_t> zero_idx;
  for (size_t i = 0; i < f.planes.size(); ++i) {
    signs[i] = sign_of(f.planes[i].eval(x));
    if (signs[i] == 0) zero_idx.push_back(i);
  }
  if (zero_idx.empty()) {
    const FunCell* c = find_fun_cell(f, signs);
    res.value = c ? c->weight : Rat(0);
    res.adjacent = {res.value};
    return res;
  }
  res.on_face = true;
  res.value = 0;
  if (zero_idx.size() > 20) fail(ErrKind::internal, "evaluate: too many incident hyperplanes");
  for (size_t mask = 0; mask < (size_t(1) << zero_idx.size()); ++mask) {
    std::vector<int> full = signs;
    std::vector<Halfspace> cone;
    for (size_t j = 0; j < zero_idx.size(); ++j) {
      int s = (mask >> j) & 1 ? 1 : -1;
      full[zero_idx[j]] = s;
      cone.push_back(side_halfspace(f.planes[zero_idx[j]], s));
    }
    // feasibility: the local cone of directions must be full-dimensional
    auto gens = hrep_to_vrep(f.dim, cone);
    if (!gens) continue;
    Vec w = zero_vec(f.dim);
    for (const Vec& r : gens->rays) w = vec_add(w, r);
    bool strict = true;
    for (const Halfspace& h : cone)
      if (h.slack(w) <= 0) {
        strict = false;
        break;
      }
    if (!strict) continue;
    const FunCell* c = find_fun_cell(f, full);
    res.adjacent.push_back(c ? c->weight : Rat(0));
  }
  std::sort(res.adjacent.begin(), res.adjacent.end(), [](const Rat& a, const Rat& b) { return a > b; });
  return res;
}

SignedSection signed_section(const PolyhedralFunction& f, const OrientedHyperplane& h) {
  if (h.dim() != f.dim) fail(ErrKind::dimension_mismatch, "signed_section: wrong dimension");
  if (f.dim == 0) fail(ErrKind::low_dimensional, "signed_section needs ambient dimension >= 1");
  SignedSection out;
  out.plane = h;
  out.chart = make_chart(h);

  std::vector<OrientedHyperplane> chart_planes;
  for (const OrientedHyperplane& g : f.planes) {
    Vec n;
    Rat b;
    if (pull_back_hyperplane(out.chart, g.normal, g.offset, n, b))
      chart_planes.push_back(make_hyperplane(n, b));
  }
  Arrangement arr = build_arrangement(f.dim - 1, std::move(chart_planes));
  Vec nu = h.oriented_normal();
  std::vector<Rat> weights(arr.cells.size());
  for (size_t i = 0; i < arr.cells.size(); ++i) {
    Vec y = out.chart.to_ambient(arr.cells[i].witness);
    weights[i] = lex_limit_weight(f, y, nu) - lex_limit_weight(f, y, vec_neg(nu));
  }
  out.section = assemble_function(arr, weights);
  return out;
}

std::vector<Facet> facets(const PolyhedralFunction& f, const Vec& base) {
  if (base.size() != f.dim) fail(ErrKind::dimension_mismatch, "facets: wrong base dimension");
  std::vector<Facet> out;
  for (const OrientedHyperplane& g : f.planes) {
    int e = sign_of(g.eval(base));
    OrientedHyperplane oriented = g;
    // base strictly positive when off the plane, canonical otherwise
    oriented.orient = e == 0 ? 1 : e;
    Facet fc;
    fc.plane = oriented;
    fc.contains_base = e == 0;
    fc.section = signed_section(f, oriented);
    if (!fc.section.section.is_zero()) out.push_back(std::move(fc));
  }
  return out;
}

SupportInfo support(const PolyhedralFunction& f) {
  SupportInfo info;
  for (const FunCell& c : f.cells) {
    info.cells.push_back(ConvexPolyhedron::from_generators(f.dim, c.gens));
    info.bounded = info.bounded && c.gens.rays.empty() && c.gens.lines.empty();
  }
  // connected components via shared (d-1)-dimensional walls
  size_t n = f.cells.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t(0));
  auto find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      size_t diff = f.planes.size(), count = 0;
      for (size_t k = 0; k < f.planes.size(); ++k) {
        if (f.cells[i].signs[k] != f.cells[j].signs[k]) {
          diff = k;
          ++count;
        }
      }
      if (count != 1) continue;
      std::vector<Halfspace> hs;
      for (size_t k = 0; k < f.planes.size(); ++k) {
        if (k == diff) continue;
        hs.push_back(side_halfspace(f.planes[k], f.cells[i].signs[k]));
      }
      hs.push_back(Halfspace{f.planes[diff].normal, f.planes[diff].offset});
      hs.push_back(Halfspace{vec_neg(f.planes[diff].normal), -f.planes[diff].offset});
      auto wall = hrep_to_vrep(f.dim, hs);
      if (!wall) continue;
      ConvexPolyhedron w = ConvexPolyhedron::from_generators(f.dim, *wall);
      if (w.affine_dim() == static_cast<int>(f.dim) - 1) parent[find(i)] = find(j);
    }
  }
  std::vector<bool> seen(n, false);
  for (size_t i = 0; i < n; ++i) seen[find(i)] = true;
  info.components = std::count(seen.begin(), seen.end(), true);
  return info;
}

}  // namespace polyvert
