#include "polyvert/transform.hpp"

#include <algorithm>
#include <cmath>

namespace polyvert {

TransformTerm simplicial_cone_transform(const Rat& weight, const Cone& c) {
  size_t d = c.dim();
  if (!c.lineality.empty() || c.generators.size() != d)
    fail(ErrKind::degenerate, "simplicial_cone_transform: cone is not simplicial");
  Mat m(c.generators.begin(), c.generators.end());
  Rat dt = det(std::move(m));
  if (dt == 0) fail(ErrKind::degenerate, "simplicial_cone_transform: dependent generators");

  TransformTerm t;
  t.vertex = c.apex;
  t.coeff = weight * rat_abs(dt);
  if (d % 2 == 1) t.coeff = -t.coeff;
  for (const Vec& g : c.generators) {
    Vec p = primitive_direction(g);  // g = lambda * p, lambda > 0
    size_t k = 0;
    while (p[k] == 0) ++k;
    Rat lambda = g[k] / p[k];
    if (p[k] < 0) {
      p = vec_neg(p);
      lambda = -lambda;
    }
    t.coeff /= lambda;
    t.forms.push_back(std::move(p));
  }
  std::sort(t.forms.begin(), t.forms.end(), lex_less);
  return t;
}

TransformSum merge_terms(size_t dim, std::vector<TransformTerm> terms) {
  std::map<std::pair<Vec, std::vector<Vec>>, Rat> acc;
  for (TransformTerm& t : terms) acc[{std::move(t.vertex), std::move(t.forms)}] += t.coeff;
  TransformSum ts;
  ts.dim = dim;
  for (auto& [key, coeff] : acc) {
    if (coeff == 0) continue;
    ts.terms.push_back(TransformTerm{coeff, key.first, key.second});
  }
  return ts;
}

TransformSum transform(const PolyconicalFunction& g) {
  std::vector<TransformTerm> terms;
  for (const WeightedCone& wc : g.terms) {
    ConeTriangulation tri = triangulate_cone(wc.cone);
    if (tri.line_cone || tri.degenerate) continue;
    for (const Cone& piece : tri.pieces)
      terms.push_back(simplicial_cone_transform(wc.weight, piece));
  }
  return merge_terms(g.dim, std::move(terms));
}

TransformSum transform(const PolyhedralFunction& f) {
  std::vector<TransformTerm> terms;
  bool bounded = true;
  for (const FunCell& c : f.cells)
    bounded = bounded && c.gens.rays.empty() && c.gens.lines.empty();

  if (bounded) {
    for (const FunCell& c : f.cells) {
      ConvexPolyhedron cell = ConvexPolyhedron::from_generators(f.dim, c.gens);
      for (const Simplex& s : triangulate_polytope(cell)) {
        for (size_t i = 0; i < s.size(); ++i) {
          Cone vc;
          vc.apex = s[i];
          for (size_t j = 0; j < s.size(); ++j)
            if (j != i) vc.generators.push_back(vec_sub(s[j], s[i]));
          terms.push_back(simplicial_cone_transform(c.weight, vc));
        }
      }
    }
    return merge_terms(f.dim, std::move(terms));
  }

  // Unbounded: per pointed cell, expand over the tangent cones at the cell
  // vertices; bounded faces of positive dimension are line-cones and
  // vanish, cells with lineality have no bounded faces at all.
  for (const FunCell& c : f.cells) {
    if (!c.gens.lines.empty()) continue;
    for (const Vec& v : c.gens.points) {
      std::vector<Halfspace> active;
      for (size_t i = 0; i < f.planes.size(); ++i) {
        if (f.planes[i].eval(v) != 0) continue;
        Halfspace side = side_halfspace(f.planes[i], c.signs[i]);
        active.push_back(Halfspace{side.normal, Rat(0)});
      }
      auto gens = hrep_to_vrep(f.dim, active);
      if (!gens) fail(ErrKind::internal, "vertex cone cannot be empty");
      Cone vc;
      vc.apex = v;
      vc.generators = gens->rays;
      vc.lineality = gens->lines;
      ConeTriangulation tri = triangulate_cone(vc);
      if (tri.line_cone || tri.degenerate)
        fail(ErrKind::internal, "vertex cone of a pointed cell must be pointed");
      for (const Cone& piece : tri.pieces)
        terms.push_back(simplicial_cone_transform(c.weight, piece));
    }
  }
  return merge_terms(f.dim, std::move(terms));
}

std::map<Vec, std::vector<TransformTerm>, LexLess> group_by_vertex(const TransformSum& ts) {
  std::map<Vec, std::vector<TransformTerm>, LexLess> groups;
  for (const TransformTerm& t : ts.terms) groups[t.vertex].push_back(t);
  return groups;
}

namespace {

// Sparse multivariate polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Rat>;

Poly poly_mul_linear(const Poly& p, const Vec& form) {
  Poly out;
  for (const auto& [e, c] : p) {
    for (size_t i = 0; i < form.size(); ++i) {
      if (form[i] == 0) continue;
      std::vector<int> e2 = e;
      e2[i] += 1;
      Rat& slot = out[e2];
      slot += c * form[i];
      if (slot == 0) out.erase(e2);
    }
  }
  return out;
}

Rat eval_form(const Vec& form, const Vec& z) { return dot(form, z); }

}  // namespace

bool is_zero_by_expansion(size_t dim, const std::vector<TransformTerm>& group) {
  // Common denominator: the product of all distinct forms (forms inside a
  // term are pairwise distinct since they are independent).
  std::vector<Vec> all;
  for (const TransformTerm& t : group)
    for (const Vec& f : t.forms) all.push_back(f);
  all = sorted_unique(std::move(all));

  Poly sum;
  for (const TransformTerm& t : group) {
    Poly num;
    num[std::vector<int>(dim, 0)] = t.coeff;
    for (const Vec& f : all) {
      bool in_term = std::binary_search(t.forms.begin(), t.forms.end(), f, lex_less);
      if (!in_term) num = poly_mul_linear(num, f);
    }
    for (const auto& [e, c] : num) {
      Rat& slot = sum[e];
      slot += c;
      if (slot == 0) sum.erase(e);
    }
  }
  return sum.empty();
}

bool is_zero_by_grid(size_t dim, const std::vector<TransformTerm>& group, uint64_t seed) {
  // Numerator degree over the common denominator is at most (m-1) * d^2 on
  // the moment curve z(k) = (k, k^2, ..., k^d).
  size_t m = group.size();
  size_t need = (m - 1) * dim * dim + 1;
  uint64_t k = seed + 1;
  size_t got = 0, guard = 0;
  while (got < need) {
    if (++guard > need + 4096) fail(ErrKind::internal, "zero-test grid exhausted");
    Vec z(dim);
    Rat kk(static_cast<long>(k));
    Rat pw = 1;
    for (size_t i = 0; i < dim; ++i) {
      pw *= kk;
      z[i] = pw;
    }
    ++k;
    bool pole = false;
    Rat val = 0;
    for (const TransformTerm& t : group) {
      Rat den = 1;
      for (const Vec& f : t.forms) den *= eval_form(f, z);
      if (den == 0) {
        pole = true;
        break;
      }
      val += t.coeff / den;
    }
    if (pole) continue;
    if (val != 0) return false;
    ++got;
  }
  return true;
}

bool is_zero(const TransformSum& ts, uint64_t seed) {
  for (const auto& [v, group] : group_by_vertex(ts)) {
    bool zero = group.size() <= kExpansionTermLimit ? is_zero_by_expansion(ts.dim, group)
                                                    : is_zero_by_grid(ts.dim, group, seed);
    if (!zero) return false;
  }
  return true;
}

std::vector<std::pair<Rat, Rat>> evaluate_exact(const TransformSum& ts, const Vec& z) {
  if (z.size() != ts.dim) fail(ErrKind::dimension_mismatch, "evaluate: wrong dimension of z");
  std::map<Rat, Rat> classes;
  for (const TransformTerm& t : ts.terms) {
    Rat den = 1;
    for (const Vec& f : t.forms) {
      Rat v = eval_form(f, z);
      if (v == 0)
        fail(ErrKind::pole, "transform evaluation pole: form " + vec_to_string(f) +
                                " vanishes at z = " + vec_to_string(z));
      den *= v;
    }
    classes[dot(t.vertex, z)] += t.coeff / den;
  }
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& [e, v] : classes)
    if (v != 0) out.emplace_back(e, v);
  return out;
}

double evaluate_numeric(const TransformSum& ts, const Vec& z) {
  double total = 0;
  for (const auto& [e, v] : evaluate_exact(ts, z))
    total += v.convert_to<double>() * std::exp(e.convert_to<double>());
  return total;
}

namespace {

// Divided difference of exp at the nodes, via the mean-shifted series
//   dd = exp(c) * sum_n h_n(t - c) / (n + d)!
// with h_n the complete homogeneous symmetric polynomials; valid for any
// nodes, fast when they are clustered.
double exp_divided_difference(const std::vector<double>& t) {
  size_t n = t.size(), d = n - 1;
  double c = 0;
  for (double x : t) c += x;
  c /= static_cast<double>(n);
  std::vector<double> s(n);
  for (size_t i = 0; i < n; ++i) s[i] = t[i] - c;

  // h[k] over a growing node set
  constexpr size_t kMax = 64;
  std::vector<double> h(kMax, 0.0);
  h[0] = 1.0;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 1; k < kMax; ++k) h[k] += s[j] * h[k - 1];

  double fact = 1;  // d!
  for (size_t i = 2; i <= d; ++i) fact *= static_cast<double>(i);
  double sum = 0, denom = fact;
  for (size_t k = 0; k < kMax; ++k) {
    sum += h[k] / denom;
    denom *= static_cast<double>(d + k + 1);
  }
  return std::exp(c) * sum;
}

double simplex_quadrature(const Simplex& s, const Vec& z, int depth) {
  size_t n = s.size();
  std::vector<double> t(n);
  for (size_t i = 0; i < n; ++i) t[i] = dot(z, s[i]).convert_to<double>();
  double lo = t[0], hi = t[0];
  for (double x : t) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi - lo <= 1.0 || depth >= 48) {
    double vol_factor = simplex_det(s).convert_to<double>();
    return vol_factor * exp_divided_difference(t);
  }
  // bisect the edge with the largest node gap
  size_t a = 0, b = 1;
  double gap = -1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(t[i] - t[j]) > gap) {
        gap = std::abs(t[i] - t[j]);
        a = i;
        b = j;
      }
  Vec mid = vec_scale(Rat(1, 2), vec_add(s[a], s[b]));
  Simplex s1 = s, s2 = s;
  s1[a] = mid;
  s2[b] = mid;
  return simplex_quadrature(s1, z, depth + 1) + simplex_quadrature(s2, z, depth + 1);
}

}  // namespace

double quadrature_oracle(const PolyhedralFunction& f, const Vec& z) {
  if (z.size() != f.dim) fail(ErrKind::dimension_mismatch, "quadrature: wrong dimension of z");
  double total = 0;
  for (const FunCell& c : f.cells) {
    if (!c.gens.rays.empty() || !c.gens.lines.empty())
      fail(ErrKind::unbounded, "quadrature oracle needs bounded support");
    ConvexPolyhedron cell = ConvexPolyhedron::from_generators(f.dim, c.gens);
    double w = c.weight.convert_to<double>();
    for (const Simplex& s : triangulate_polytope(cell)) total += w * simplex_quadrature(s, z, 0);
  }
  return total;
}

}  // namespace polyvert
