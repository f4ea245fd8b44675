// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails.  Tolerances and wall-time budgets are pinned here.

#include "polyvert/decomposition.hpp"
#include "polyvert/gallery.hpp"
#include "polyvert/scene.hpp"
#include "polyvert/transform.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace polyvert;

namespace {

constexpr double kOracleRelTol = 1e-6;

int failures = 0;

void criterion(int number, const std::string& label, double budget_s,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    ok = false;
    note += " (over budget)";
  }
  std::printf("%s criterion %d: %s [%.2fs / %.0fs]%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), secs, budget_s, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

PolyhedralFunction fun(const std::string& name) { return scene_function(gallery_scene(name)); }

Vec v2r(long a, long b) { return Vec{Rat(a), Rat(b)}; }

std::vector<Vec> box_corners(size_t d) {
  std::vector<Vec> out;
  for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
    Vec v(d);
    for (size_t i = 0; i < d; ++i) v[i] = Rat((mask >> i) & 1);
    out.push_back(std::move(v));
  }
  return sorted_unique(std::move(out));
}

bool convex_vertex_recovery() {
  if (algebraic_vertices(fun("cube")) != box_corners(3)) return false;
  if (algebraic_vertices(fun("square")) != box_corners(2)) return false;
  return true;
}

bool triple_cone_zero_transform() {
  PolyhedralFunction f = fun("three-sectors");
  PolyconicalFunction apex = tangent_cone(f, v2r(0, 0));
  TransformSum ts = transform(apex);
  if (!is_zero(ts)) return false;
  for (const auto& [v, group] : group_by_vertex(ts))
    if (!is_zero_by_expansion(f.dim, group)) return false;
  return algebraic_vertices(f).empty();
}

bool simplex_decomposition_end_to_end() {
  for (const char* name : {"square", "lshape", "schonhardt"}) {
    PolyhedralFunction f = fun(name);
    SignedDecomposition dec = decompose_simplices(f);
    if (!dec.certificate || !dec.integer_coefficients) return false;
    std::vector<Vec> corners;
    for (const SimplexTerm& t : dec.simplices)
      corners.insert(corners.end(), t.simplex.begin(), t.simplex.end());
    if (sorted_unique(std::move(corners)) != algebraic_vertices(f)) return false;
    if (!ae_equal(f, decomposition_function(f.dim, dec))) return false;
  }
  return true;
}

bool cone_decomposition_end_to_end() {
  std::vector<PolyhedralFunction> cases;
  cases.push_back(from_weighted_union(
      2, {{Rat(1), ConvexPolyhedron::from_halfspaces(
                       2, {Halfspace{v2r(-1, 0), Rat(0)}, Halfspace{v2r(0, -1), Rat(0)}})}}));
  cases.push_back(fun("square"));
  cases.push_back(fun("lshape"));
  cases.push_back(fun("halfplane"));
  for (const PolyhedralFunction& f : cases) {
    SignedDecomposition dec = decompose_cones(f);
    if (!dec.certificate || !dec.residual_transform_zero) return false;
    PolyconicalFunction residual;
    residual.dim = f.dim;
    for (const ConeTerm& t : dec.residual) {
      if (!is_line_cone(t.cone)) return false;
      residual.terms.push_back(WeightedCone{t.coeff, t.cone});
    }
    if (!is_zero(transform(residual))) return false;
  }
  return true;
}

bool brianchon_gram_random() {
  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolyhedron p = random_polytope(3, 10, rng);
    std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
    for (const BGTerm& t : brianchon_gram(p))
      pieces.emplace_back(Rat(t.sign), cone_to_polyhedron(t.cone));
    PolyhedralFunction lhs = from_weighted_union(3, {{Rat(1), p}});
    if (!ae_equal(lhs, from_weighted_union(3, pieces))) return false;
  }
  return true;
}

bool transform_vs_oracle() {
  for (const char* name : {"interval", "square", "cube", "lshape"}) {
    PolyhedralFunction f = fun(name);
    TransformSum ts = transform(f);
    Rng rng(99);
    int done = 0;
    while (done < 5) {
      Vec z(f.dim);
      for (size_t i = 0; i < f.dim; ++i) z[i] = Rat(rng.range(-3, 3));
      if (is_zero_vec(z)) continue;
      try {
        evaluate_exact(ts, z);
      } catch (const Error&) {
        continue;  // pole: outside the safe regime
      }
      double sym = evaluate_numeric(ts, z);
      double orc = quadrature_oracle(f, z);
      double rel = std::abs(sym - orc) / std::max(1.0, std::abs(orc));
      if (rel > kOracleRelTol) return false;
      ++done;
    }
  }
  return true;
}

bool section_criterion_scenes() {
  std::vector<PolyhedralFunction> zero, nonzero;

  auto halfplane = [](long nx, long ny, long b) {
    return from_weighted_union(2, {{Rat(1), ConvexPolyhedron::from_halfspaces(
                                                2, {Halfspace{v2r(nx, ny), Rat(b)}})}});
  };
  zero.push_back(halfplane(0, -1, 0));
  zero.push_back(halfplane(1, 0, 0));
  zero.push_back(halfplane(-1, -1, 1));
  zero.push_back(from_weighted_union(
      2, {{Rat(1), ConvexPolyhedron::from_halfspaces(
                       2, {Halfspace{v2r(0, -1), Rat(0)}, Halfspace{v2r(0, 1), Rat(1)}})}}));
  zero.push_back(fun("three-sectors"));

  for (const char* name : {"interval", "square", "lshape", "triangle", "pinch"})
    nonzero.push_back(fun(name));

  for (const PolyhedralFunction& f : zero) {
    SectionCriterionReport r = check_section_criterion(f, f.planes);
    if (!r.transform_zero || !r.all_sections_zero || !r.biconditional_holds || r.hard_violation)
      return false;
  }
  for (const PolyhedralFunction& f : nonzero) {
    SectionCriterionReport r = check_section_criterion(f, f.planes);
    if (r.transform_zero || r.all_sections_zero || !r.biconditional_holds || r.hard_violation)
      return false;
  }
  return true;
}

bool zero_test_agreement() {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    size_t d = 1 + rng.below(3);
    Vec vertex(d);
    for (size_t i = 0; i < d; ++i) vertex[i] = Rat(rng.range(-2, 2));

    auto random_term = [&]() {
      TransformTerm t;
      t.vertex = vertex;
      t.coeff = Rat(rng.range(1, 5)) * (rng.below(2) ? 1 : -1);
      for (;;) {
        t.forms.clear();
        for (size_t i = 0; i < d; ++i) {
          Vec form(d);
          for (size_t j = 0; j < d; ++j) form[j] = Rat(rng.range(-3, 3));
          if (is_zero_vec(form)) form[i] = 1;
          t.forms.push_back(primitive_direction(form));
        }
        Mat m(t.forms.begin(), t.forms.end());
        if (rank(m) == d) break;
      }
      return t;
    };

    std::vector<TransformTerm> group;
    if (trial % 2 == 0) {
      // cancelling construction: k terms plus their negations
      size_t k = 1 + rng.below(3);
      for (size_t i = 0; i < k; ++i) {
        TransformTerm t = random_term();
        TransformTerm neg = t;
        neg.coeff = -neg.coeff;
        group.push_back(t);
        group.push_back(neg);
      }
    } else {
      size_t m = 1 + rng.below(6);
      for (size_t i = 0; i < m; ++i) group.push_back(random_term());
    }

    bool by_expansion = is_zero_by_expansion(d, group);
    bool by_grid = is_zero_by_grid(d, group, trial);
    if (by_expansion != by_grid) return false;
  }
  return true;
}

bool star_reduction_random() {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    size_t d = 1 + rng.below(3);
    Cone c;
    c.apex = Vec(d);
    for (size_t i = 0; i < d; ++i) c.apex[i] = Rat(rng.range(-2, 2));
    for (;;) {
      c.generators.clear();
      for (size_t i = 0; i < d; ++i) {
        Vec g(d);
        for (size_t j = 0; j < d; ++j) g[j] = Rat(rng.range(-3, 3));
        if (is_zero_vec(g)) g[i] = 1;
        c.generators.push_back(g);
      }
      Mat m(c.generators.begin(), c.generators.end());
      if (rank(m) == d) break;
    }

    Vec v(d);
    for (;;) {
      bool generic = true;
      for (size_t j = 0; j < d; ++j) v[j] = Rat(rng.range(-4, 4));
      for (const Vec& w : c.generators) generic = generic && dot(v, w) != 0;
      if (generic) break;
    }

    StarReduction sr = star_reduction(c, v);
    for (const Vec& w : sr.star.generators)
      if (dot(v, w) <= 0) return false;

    // [c] - sign [c*] - sum_i sign_i [line_i] must vanish a.e.
    std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
    pieces.emplace_back(Rat(1), cone_to_polyhedron(c));
    pieces.emplace_back(Rat(-sr.sign), cone_to_polyhedron(sr.star));
    for (const auto& [sg, lc] : sr.line_cones)
      pieces.emplace_back(Rat(-sg), cone_to_polyhedron(lc));
    if (!from_weighted_union(d, pieces).is_zero()) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "algebraic vertices of cube and square are exactly the corners", 5,
            convex_vertex_recovery);
  criterion(2, "triple-cone apex transform is zero and no vertex is algebraic", 1,
            triple_cone_zero_transform);
  criterion(3, "simplex decompositions: integer, certified, vertex-minimal", 60,
            simplex_decomposition_end_to_end);
  criterion(4, "cone decompositions certified with zero-transform residual", 30,
            cone_decomposition_end_to_end);
  criterion(5, "Brianchon-Gram reassembly on 10 random 3-polytopes", 60, brianchon_gram_random);
  criterion(6, "symbolic transform matches quadrature within 1e-6", 30, transform_vs_oracle);
  criterion(7, "section criterion biconditional on 5 zero / 5 nonzero scenes", 30,
            section_criterion_scenes);
  criterion(8, "grid zero-test agrees with expansion on 50 seeded sums", 30, zero_test_agreement);
  criterion(9, "star reduction identity on 50 seeded simplicial cones", 30, star_reduction_random);

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
