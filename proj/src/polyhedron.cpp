#include "polyvert/polyhedron.hpp"

#include <algorithm>
#include <map>

namespace polyvert {

Halfspace canonical_halfspace(const Halfspace& h) {
  Vec p = primitive_direction(h.normal);
  // p = s * normal for a positive rational s; find s from the first nonzero.
  size_t k = 0;
  while (h.normal[k] == 0) ++k;
  Rat s = p[k] / h.normal[k];
  return Halfspace{p, s * h.offset};
}

GeneratorSet clip_generators(const GeneratorSet& g, const Halfspace& h) {
  GeneratorSet cur = g;

  // Break lineality that crosses the hyperplane: keep a basis tangent to it
  // and trade the transversal direction for a pair of opposite rays.
  size_t pivot = cur.lines.size();
  for (size_t i = 0; i < cur.lines.size(); ++i) {
    if (dot(h.normal, cur.lines[i]) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot != cur.lines.size()) {
    Vec l0 = cur.lines[pivot];
    Rat s0 = dot(h.normal, l0);
    std::vector<Vec> rest;
    for (size_t i = 0; i < cur.lines.size(); ++i) {
      if (i == pivot) continue;
      Rat si = dot(h.normal, cur.lines[i]);
      rest.push_back(si == 0 ? cur.lines[i] : vec_sub(cur.lines[i], vec_scale(si / s0, l0)));
    }
    cur.lines = std::move(rest);
    cur.rays.push_back(l0);
    cur.rays.push_back(vec_neg(l0));
  }

  std::vector<Rat> sp(cur.points.size()), sr(cur.rays.size());
  for (size_t i = 0; i < cur.points.size(); ++i) sp[i] = dot(h.normal, cur.points[i]) - h.offset;
  for (size_t i = 0; i < cur.rays.size(); ++i) sr[i] = dot(h.normal, cur.rays[i]);

  GeneratorSet out;
  out.lines = cur.lines;
  for (size_t i = 0; i < cur.points.size(); ++i)
    if (sp[i] <= 0) out.points.push_back(cur.points[i]);
  for (size_t i = 0; i < cur.rays.size(); ++i)
    if (sr[i] <= 0) out.rays.push_back(cur.rays[i]);

  // point/point crossings
  for (size_t i = 0; i < cur.points.size(); ++i) {
    if (sp[i] >= 0) continue;
    for (size_t j = 0; j < cur.points.size(); ++j) {
      if (sp[j] <= 0) continue;
      Rat t = sp[j] / (sp[j] - sp[i]);  // in (0,1)
      Vec x = vec_add(vec_scale(t, cur.points[i]), vec_scale(Rat(1) - t, cur.points[j]));
      out.points.push_back(std::move(x));
    }
  }
  // point/ray crossings (either orientation of escape)
  for (size_t i = 0; i < cur.points.size(); ++i) {
    for (size_t j = 0; j < cur.rays.size(); ++j) {
      if ((sp[i] < 0 && sr[j] > 0) || (sp[i] > 0 && sr[j] < 0)) {
        Rat t = -sp[i] / sr[j];
        out.points.push_back(vec_add(cur.points[i], vec_scale(t, cur.rays[j])));
      }
    }
  }
  // ray/ray crossings
  for (size_t i = 0; i < cur.rays.size(); ++i) {
    if (sr[i] >= 0) continue;
    for (size_t j = 0; j < cur.rays.size(); ++j) {
      if (sr[j] <= 0) continue;
      out.rays.push_back(vec_sub(vec_scale(sr[j], cur.rays[i]), vec_scale(sr[i], cur.rays[j])));
    }
  }
  return out;
}

namespace {

// Reduce v modulo the span of `lines` (assumed rref'd): canonical coset rep.
Vec mod_lines(Vec v, const std::vector<Vec>& lines, const std::vector<size_t>& pivots) {
  for (size_t i = 0; i < lines.size(); ++i) {
    const Rat& c = v[pivots[i]];
    if (c != 0) v = vec_sub(v, vec_scale(c, lines[i]));
  }
  return v;
}

}  // namespace

void reduce_generators(GeneratorSet& g, const std::vector<Halfspace>& active) {
  if (g.empty()) return;
  size_t d = g.points[0].size();

  // The lineality space is the common kernel of the defining normals; the
  // explicit line list can undersell it (opposite rays in user input), so
  // recover it from `active` rather than trusting the generators.
  Mat lm(g.lines.begin(), g.lines.end());
  {
    Mat norms;
    for (const Halfspace& h : active) norms.push_back(h.normal);
    for (Vec& u : kernel_basis(norms, d)) lm.push_back(std::move(u));
  }
  std::vector<size_t> lp = rref(lm);
  g.lines.assign(lm.begin(), lm.begin() + lp.size());

  // Rays: canonical mod lineality, primitive, deduplicated, then keep only
  // extreme ones (tight normals plus lineality span a space of rank d-1).
  // Dropping non-extreme rays is safe by the Minkowski-Weyl decomposition.
  std::vector<Vec> rays;
  for (const Vec& r0 : g.rays) {
    Vec r = mod_lines(r0, g.lines, lp);
    if (!is_zero_vec(r)) rays.push_back(primitive_direction(r));
  }
  rays = sorted_unique(std::move(rays));
  std::vector<Vec> extreme;
  for (const Vec& r : rays) {
    std::vector<Vec> tight(g.lines.begin(), g.lines.end());
    for (const Halfspace& h : active)
      if (dot(h.normal, r) == 0) tight.push_back(h.normal);
    if (rank_of(tight) >= d - 1) extreme.push_back(r);
  }
  g.rays = std::move(extreme);

  // Points: canonical mod lineality, deduplicated; keep points of maximal
  // tight rank.  Every minimal face carries at least one candidate (faces
  // absorb convex decompositions), and those have the maximal rank, so the
  // survivors are exactly representatives of the minimal faces.
  std::vector<Vec> pts;
  for (const Vec& p0 : g.points) pts.push_back(mod_lines(p0, g.lines, lp));
  pts = sorted_unique(std::move(pts));
  size_t best = 0;
  std::vector<size_t> ranks(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> tight(g.lines.begin(), g.lines.end());
    for (const Halfspace& h : active)
      if (dot(h.normal, pts[i]) == h.offset) tight.push_back(h.normal);
    ranks[i] = rank_of(tight);
    best = std::max(best, ranks[i]);
  }
  g.points.clear();
  for (size_t i = 0; i < pts.size(); ++i)
    if (ranks[i] == best) g.points.push_back(pts[i]);
}

std::optional<GeneratorSet> hrep_to_vrep(size_t dim, const std::vector<Halfspace>& hs) {
  GeneratorSet g;
  g.points.push_back(zero_vec(dim));
  for (size_t i = 0; i < dim; ++i) g.lines.push_back(unit_vec(dim, i));
  std::vector<Halfspace> active;
  for (const Halfspace& h : hs) {
    if (is_zero_vec(h.normal)) {
      if (h.offset < 0) return std::nullopt;  // 0 <= b infeasible
      continue;
    }
    active.push_back(h);
    g = clip_generators(g, h);
    if (g.empty()) return std::nullopt;
    reduce_generators(g, active);
  }
  return g;
}

std::vector<Halfspace> vrep_to_hrep(size_t dim, const GeneratorSet& g) {
  if (g.empty()) fail(ErrKind::empty, "vrep_to_hrep: empty generator set");
  // Homogenize: C = cone{(p,1), (r,0)} + span{(l,0)} in R^{d+1}; the facets
  // of P are exactly the extreme rays / lineality of the polar cone of C.
  std::vector<Halfspace> polar;
  auto lift = [&](const Vec& v, const Rat& last) {
    Vec w = v;
    w.push_back(last);
    return w;
  };
  for (const Vec& p : g.points) polar.push_back(Halfspace{lift(p, 1), Rat(0)});
  for (const Vec& r : g.rays) polar.push_back(Halfspace{lift(r, 0), Rat(0)});
  for (const Vec& l : g.lines) {
    polar.push_back(Halfspace{lift(l, 0), Rat(0)});
    polar.push_back(Halfspace{lift(vec_neg(l), 0), Rat(0)});
  }
  auto dual = hrep_to_vrep(dim + 1, polar);
  if (!dual) fail(ErrKind::internal, "polar cone of a nonempty set cannot be empty");

  std::vector<Halfspace> out;
  auto emit = [&](const Vec& w) {
    Vec a(w.begin(), w.end() - 1);
    if (is_zero_vec(a)) return;
    out.push_back(canonical_halfspace(Halfspace{a, -w.back()}));
  };
  for (const Vec& r : dual->rays) emit(r);
  for (const Vec& l : dual->lines) {
    emit(l);
    emit(vec_neg(l));
  }
  // dedupe (lineality directions can coincide with rays after emit)
  std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Halfspace& a, const Halfspace& b) {
                          return a.normal == b.normal && a.offset == b.offset;
                        }),
            out.end());
  return out;
}

// ---- ConvexPolyhedron ----

ConvexPolyhedron ConvexPolyhedron::from_halfspaces(size_t dim, std::vector<Halfspace> hs) {
  ConvexPolyhedron p(dim);
  for (const Halfspace& h : hs)
    if (h.normal.size() != dim) fail(ErrKind::dimension_mismatch, "halfspace of wrong dimension");
  p.hrep_ = std::move(hs);
  return p;
}

ConvexPolyhedron ConvexPolyhedron::from_generators(size_t dim, GeneratorSet g) {
  ConvexPolyhedron p(dim);
  for (const auto* lst : {&g.points, &g.rays, &g.lines})
    for (const Vec& v : *lst)
      if (v.size() != dim) fail(ErrKind::dimension_mismatch, "generator of wrong dimension");
  p.empty_ = g.empty();
  p.empty_known_ = true;
  p.vrep_ = std::move(g);
  return p;
}

ConvexPolyhedron ConvexPolyhedron::empty_set(size_t dim) {
  ConvexPolyhedron p(dim);
  p.empty_ = true;
  p.empty_known_ = true;
  p.vrep_ = GeneratorSet{};
  p.hrep_ = std::vector<Halfspace>{Halfspace{zero_vec(dim), Rat(-1)}};
  return p;
}

bool ConvexPolyhedron::is_empty() const {
  if (!empty_known_) dual_description();
  return empty_;
}

void ConvexPolyhedron::dual_description() const {
  if (!hrep_ && !vrep_) fail(ErrKind::internal, "polyhedron with no representation");
  if (!vrep_) {
    auto g = hrep_to_vrep(dim_, *hrep_);
    empty_ = !g.has_value();
    empty_known_ = true;
    vrep_ = empty_ ? GeneratorSet{} : std::move(*g);
  }
  if (!hrep_) {
    empty_ = vrep_->empty();
    empty_known_ = true;
    hrep_ = empty_ ? std::vector<Halfspace>{Halfspace{zero_vec(dim_), Rat(-1)}}
                   : vrep_to_hrep(dim_, *vrep_);
  }
  if (!empty_known_) {
    empty_ = vrep_ ? vrep_->empty() : false;
    empty_known_ = true;
  }
}

const std::vector<Halfspace>& ConvexPolyhedron::hrep() const {
  if (!hrep_) dual_description();
  return *hrep_;
}

const GeneratorSet& ConvexPolyhedron::vrep() const {
  if (!vrep_) dual_description();
  return *vrep_;
}

bool ConvexPolyhedron::contains(const Vec& x) const {
  if (x.size() != dim_) fail(ErrKind::dimension_mismatch, "contains: wrong dimension");
  if (hrep_) {
    for (const Halfspace& h : *hrep_)
      if (!h.admits(x)) return false;
    return true;
  }
  if (is_empty()) return false;
  for (const Halfspace& h : hrep())
    if (!h.admits(x)) return false;
  return true;
}

bool ConvexPolyhedron::bounded() const {
  if (is_empty()) return true;
  const GeneratorSet& g = vrep();
  return g.rays.empty() && g.lines.empty();
}

int ConvexPolyhedron::affine_dim() const {
  if (is_empty()) return -1;
  const GeneratorSet& g = vrep();
  std::vector<Vec> span;
  for (size_t i = 1; i < g.points.size(); ++i) span.push_back(vec_sub(g.points[i], g.points[0]));
  span.insert(span.end(), g.rays.begin(), g.rays.end());
  span.insert(span.end(), g.lines.begin(), g.lines.end());
  return static_cast<int>(rank_of(span));
}

Vec ConvexPolyhedron::interior_point() const {
  if (is_empty()) fail(ErrKind::empty, "interior_point of empty polyhedron");
  const GeneratorSet& g = vrep();
  Vec x = zero_vec(dim_);
  for (const Vec& p : g.points) x = vec_add(x, p);
  x = vec_scale(Rat(1) / Rat(static_cast<int>(g.points.size())), x);
  for (const Vec& r : g.rays) x = vec_add(x, r);
  return x;
}

std::vector<Vec> ConvexPolyhedron::vertices() const {
  if (is_empty()) return {};
  const GeneratorSet& g = vrep();
  if (!g.lines.empty())
    fail(ErrKind::degenerate, "vertices requested for a polyhedron with lineality");
  return sorted_unique(g.points);
}

std::vector<Halfspace> ConvexPolyhedron::facet_halfspaces() const {
  if (is_empty()) fail(ErrKind::empty, "facets of empty polyhedron");
  return vrep_to_hrep(dim_, vrep());
}

std::vector<Vec> sorted_unique(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::string halfspace_to_string(const Halfspace& h) {
  return vec_to_string(h.normal) + " . x <= " + rat_to_string(h.offset);
}

}  // namespace polyvert
