#include "polyvert/decomposition.hpp"

#include "polyvert/parallel.hpp"

#include <algorithm>
#include <map>

namespace polyvert {

std::vector<Vec> algebraic_vertices(const PolyhedralFunction& f, uint64_t seed) {
  std::vector<Vec> candidates = arrangement_vertices(f.dim, f.planes);
  std::function<char(size_t)> test = [&](size_t i) -> char {
    PolyconicalFunction tc = tangent_cone(f, candidates[i]);
    if (tc.is_zero()) return 0;
    return is_zero(transform(tc), seed) ? 0 : 1;
  };
  std::vector<char> keep = parallel_map(candidates.size(), test);
  std::vector<Vec> out;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

std::vector<Vec> geometric_vertices(const PolyhedralFunction& f) {
  std::vector<Vec> candidates = arrangement_vertices(f.dim, f.planes);
  std::vector<Vec> out;
  for (const Vec& v : candidates) {
    PolyconicalFunction tc = tangent_cone(f, v);
    if (tc.is_zero()) continue;
    for (WeightedCone& wc : tc.terms) wc.weight = 1;  // indicator of the support
    PolyhedralFunction s = polyconical_to_function(tc);
    std::vector<Vec> essential;
    for (const OrientedHyperplane& h : f.planes) {
      if (h.eval(v) != 0) continue;
      if (!signed_section(s, h).section.is_zero()) essential.push_back(h.normal);
    }
    if (rank_of(essential) == f.dim) out.push_back(v);
  }
  return out;
}

// ---- simplices ----

namespace {

std::vector<SimplexTerm> merge_simplex_terms(std::vector<SimplexTerm> terms) {
  std::map<std::vector<Vec>, Rat> acc;
  for (SimplexTerm& t : terms) {
    std::sort(t.simplex.begin(), t.simplex.end(), lex_less);
    acc[t.simplex] += t.coeff;
  }
  std::vector<SimplexTerm> out;
  for (auto& [s, c] : acc)
    if (c != 0) out.push_back(SimplexTerm{c, s});
  return out;
}

std::vector<SimplexTerm> decompose_rec(const PolyhedralFunction& f, uint64_t seed) {
  if (f.is_zero()) return {};
  if (f.dim == 1) {
    // intervals sorted by left endpoint, equal-weight neighbours merged so
    // that segment endpoints are exactly the jump points
    struct Seg {
      Rat a, b, w;
    };
    std::vector<Seg> segs;
    for (const FunCell& c : f.cells) {
      if (!c.gens.rays.empty() || !c.gens.lines.empty())
        fail(ErrKind::unbounded, "decompose: unbounded support");
      Rat a = c.gens.points[0][0], b = a;
      for (const Vec& p : c.gens.points) {
        a = std::min(a, p[0]);
        b = std::max(b, p[0]);
      }
      segs.push_back(Seg{a, b, c.weight});
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.a < y.a; });
    std::vector<Seg> merged;
    for (const Seg& s : segs) {
      if (!merged.empty() && merged.back().b == s.a && merged.back().w == s.w)
        merged.back().b = s.b;
      else
        merged.push_back(s);
    }
    std::vector<SimplexTerm> out;
    for (const Seg& s : merged) out.push_back(SimplexTerm{s.w, Simplex{{s.a}, {s.b}}});
    return out;
  }

  std::vector<Vec> verts = algebraic_vertices(f, seed);
  if (verts.empty()) fail(ErrKind::internal, "nonzero bounded function without algebraic vertices");
  const Vec& apex = verts.front();

  std::vector<SimplexTerm> out;
  for (const OrientedHyperplane& plane : f.planes) {
    int e = sign_of(plane.eval(apex));
    if (e == 0) continue;  // pyramids over facets through the apex vanish
    OrientedHyperplane oriented = plane;
    oriented.orient = e;
    SignedSection sec = signed_section(f, oriented);
    if (sec.section.is_zero()) continue;
    for (const SimplexTerm& sub : decompose_rec(sec.section, seed)) {
      SimplexTerm lifted;
      lifted.coeff = sub.coeff;
      lifted.simplex.push_back(apex);
      for (const Vec& u : sub.simplex) lifted.simplex.push_back(sec.chart.to_ambient(u));
      out.push_back(std::move(lifted));
    }
  }
  return merge_simplex_terms(std::move(out));
}

}  // namespace

PolyhedralFunction decomposition_function(size_t dim, const SignedDecomposition& dec) {
  std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
  for (const SimplexTerm& t : dec.simplices) {
    GeneratorSet g;
    g.points = t.simplex;
    pieces.emplace_back(t.coeff, ConvexPolyhedron::from_generators(dim, std::move(g)));
  }
  for (const ConeTerm& t : dec.cones) pieces.emplace_back(t.coeff, cone_to_polyhedron(t.cone));
  for (const ConeTerm& t : dec.residual) pieces.emplace_back(t.coeff, cone_to_polyhedron(t.cone));
  return from_weighted_union(dim, pieces);
}

SignedDecomposition decompose_simplices(const PolyhedralFunction& f, uint64_t seed) {
  for (const FunCell& c : f.cells)
    if (!c.gens.rays.empty() || !c.gens.lines.empty())
      fail(ErrKind::unbounded, "decompose_simplices: unbounded support");

  SignedDecomposition dec;
  dec.kind = SignedDecomposition::Kind::simplices;
  dec.simplices = decompose_rec(f, seed);

  dec.integer_coefficients = true;
  for (const SimplexTerm& t : dec.simplices)
    dec.integer_coefficients = dec.integer_coefficients && is_integer(t.coeff);

  bool identity = ae_equal(f, decomposition_function(f.dim, dec));
  bool minimal = minimality_check(f, dec, seed);
  bool integral_ok = !f.integer_weights() || dec.integer_coefficients;
  dec.certificate = identity && minimal && integral_ok;
  return dec;
}

// ---- cones ----

namespace {

Vec generic_direction(size_t dim, const std::vector<Vec>& must_miss) {
  for (long k = 1;; ++k) {
    Vec u(dim);
    Rat pw = 1;
    u[0] = 1;
    for (size_t i = 1; i < dim; ++i) {
      pw *= Rat(k);
      u[i] = pw;
    }
    bool ok = true;
    for (const Vec& w : must_miss)
      if (dot(u, w) == 0) {
        ok = false;
        break;
      }
    if (ok) return u;
  }
}

std::vector<ConeTerm> merge_cone_terms(std::vector<ConeTerm> terms) {
  std::map<std::pair<Vec, std::pair<std::vector<Vec>, std::vector<Vec>>>, Rat> acc;
  for (ConeTerm& t : terms) {
    Cone c = canonicalize_cone(t.cone);
    acc[{c.apex, {c.generators, c.lineality}}] += t.coeff;
  }
  std::vector<ConeTerm> out;
  for (auto& [key, coeff] : acc) {
    if (coeff == 0) continue;
    Cone c;
    c.apex = key.first;
    c.generators = key.second.first;
    c.lineality = key.second.second;
    out.push_back(ConeTerm{coeff, std::move(c)});
  }
  return out;
}

}  // namespace

SignedDecomposition decompose_cones(const PolyhedralFunction& f, uint64_t seed) {
  SignedDecomposition dec;
  dec.kind = SignedDecomposition::Kind::cones;
  std::vector<ConeTerm> vertex_terms, residual;

  // Line-cone corrections from the cell-by-cell Brianchon-Gram expansion:
  // bounded faces of positive dimension for pointed cells, every quotient
  // term for cells with lineality.
  for (const FunCell& cell : f.cells) {
    ConvexPolyhedron poly = ConvexPolyhedron::from_generators(f.dim, cell.gens);
    bool pointed = cell.gens.lines.empty();
    for (const BGTerm& term : brianchon_gram(poly)) {
      if (pointed && term.face_dim == 0) continue;  // handled per vertex below
      residual.push_back(ConeTerm{cell.weight * term.sign, term.cone});
    }
  }

  std::vector<Vec> used_vertices;
  for (const Vec& v : arrangement_vertices(f.dim, f.planes)) {
    PolyconicalFunction tc = tangent_cone(f, v);
    if (tc.is_zero()) continue;
    bool algebraic = !is_zero(transform(tc), seed);
    if (algebraic) {
      used_vertices.push_back(v);
      for (const WeightedCone& wc : tc.terms) {
        vertex_terms.push_back(ConeTerm{wc.weight, wc.cone});
        // local cones of non-pointed cells were never produced by the
        // Brianchon-Gram pass, so emitting the full tangent cone needs a
        // compensating residual entry
        if (!canonicalize_cone(wc.cone).lineality.empty())
          residual.push_back(ConeTerm{-wc.weight, wc.cone});
      }
      continue;
    }
    // Non-algebraic candidate: the pointed part of the tangent cone has
    // zero transform; rewrite it into line-cones by star reduction, the
    // signed sum of the remaining upper cones is a.e. zero and is dropped.
    std::vector<Cone> pieces;
    std::vector<Rat> weights;
    std::vector<Vec> all_gens;
    for (const WeightedCone& wc : tc.terms) {
      ConeTriangulation tri = triangulate_cone(wc.cone);
      if (tri.line_cone || tri.degenerate) continue;
      for (const Cone& piece : tri.pieces) {
        pieces.push_back(piece);
        weights.push_back(wc.weight);
        for (const Vec& g : piece.generators) all_gens.push_back(g);
      }
    }
    if (pieces.empty()) continue;
    Vec u = generic_direction(f.dim, all_gens);
    for (size_t i = 0; i < pieces.size(); ++i) {
      StarReduction sr = star_reduction(pieces[i], u);
      for (const auto& [sgn, line] : sr.line_cones)
        residual.push_back(ConeTerm{weights[i] * sgn, line});
    }
  }

  dec.cones = merge_cone_terms(std::move(vertex_terms));
  dec.residual = merge_cone_terms(std::move(residual));

  bool residual_lines_only = true;
  for (const ConeTerm& t : dec.residual)
    residual_lines_only = residual_lines_only && !t.cone.lineality.empty();

  PolyconicalFunction res_fun;
  res_fun.dim = f.dim;
  for (const ConeTerm& t : dec.residual) res_fun.terms.push_back(WeightedCone{t.coeff, t.cone});
  dec.residual_transform_zero = is_zero(transform(res_fun), seed);

  dec.integer_coefficients = true;
  for (const ConeTerm& t : dec.cones)
    dec.integer_coefficients = dec.integer_coefficients && is_integer(t.coeff);

  bool identity = ae_equal(f, decomposition_function(f.dim, dec));
  bool minimal = minimality_check(f, dec, seed);
  dec.certificate = identity && minimal && residual_lines_only && dec.residual_transform_zero;
  return dec;
}

bool minimality_check(const PolyhedralFunction& f, const SignedDecomposition& dec, uint64_t seed) {
  std::vector<Vec> used;
  if (dec.kind == SignedDecomposition::Kind::simplices) {
    for (const SimplexTerm& t : dec.simplices)
      for (const Vec& v : t.simplex) used.push_back(v);
  } else {
    for (const ConeTerm& t : dec.cones) used.push_back(t.cone.apex);
  }
  return sorted_unique(std::move(used)) == algebraic_vertices(f, seed);
}

SectionCriterionReport check_section_criterion(const PolyhedralFunction& f,
                                           const std::vector<OrientedHyperplane>& planes,
                                           uint64_t seed) {
  SectionCriterionReport rep;
  rep.transform_zero = is_zero(transform(f), seed);
  for (const OrientedHyperplane& h : planes) {
    SectionCheck sc;
    sc.plane = h;
    SignedSection sec = signed_section(f, h);
    sc.section_transform_zero = is_zero(transform(sec.section), seed);
    rep.all_sections_zero = rep.all_sections_zero && sc.section_transform_zero;
    rep.sections.push_back(std::move(sc));
  }
  rep.biconditional_holds = rep.transform_zero == rep.all_sections_zero;
  rep.hard_violation = rep.transform_zero && !rep.all_sections_zero;
  return rep;
}

}  // namespace polyvert
