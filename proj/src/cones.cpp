#include "polyvert/cones.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyvert {

PolyconicalFunction tangent_cone(const PolyhedralFunction& f, const Vec& v) {
  if (v.size() != f.dim) fail(ErrKind::dimension_mismatch, "tangent_cone: wrong dimension");
  PolyconicalFunction out;
  out.dim = f.dim;
  out.apex = v;
  std::vector<int> vsign(f.planes.size());
  for (size_t i = 0; i < f.planes.size(); ++i) vsign[i] = sign_of(f.planes[i].eval(v));
  for (const FunCell& cell : f.cells) {
    bool compatible = true;
    std::vector<Halfspace> active;
    for (size_t i = 0; i < f.planes.size(); ++i) {
      if (vsign[i] == 0) {
        Halfspace side = side_halfspace(f.planes[i], cell.signs[i]);
        active.push_back(Halfspace{side.normal, Rat(0)});  // directions only
      } else if (vsign[i] != cell.signs[i]) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    auto gens = hrep_to_vrep(f.dim, active);
    if (!gens) fail(ErrKind::internal, "tangent cone cell cannot be empty");
    Cone c;
    c.apex = v;
    c.generators = sorted_unique(std::move(gens->rays));
    c.lineality = gens->lines;
    out.terms.push_back(WeightedCone{cell.weight, std::move(c)});
  }
  return out;
}

PolyhedralFunction polyconical_to_function(const PolyconicalFunction& g) {
  std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
  for (const WeightedCone& t : g.terms) pieces.emplace_back(t.weight, cone_to_polyhedron(t.cone));
  return from_weighted_union(g.dim, pieces);
}

namespace {

std::vector<BGTerm> brianchon_gram_pointed(size_t dim, const std::vector<Halfspace>& hs,
                                           const GeneratorSet& gens,
                                           const std::vector<Vec>& extra_lineality) {
  check(hs.size() <= 64, ErrKind::internal, "brianchon_gram: too many facets");
  const std::vector<Vec>& verts = gens.points;

  auto active_mask = [&](const Vec& v) {
    uint64_t m = 0;
    for (size_t i = 0; i < hs.size(); ++i)
      if (dot(hs[i].normal, v) == hs[i].offset) m |= uint64_t(1) << i;
    return m;
  };

  std::vector<uint64_t> vmask(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) vmask[i] = active_mask(verts[i]);

  // Closure of the vertex active-sets under intersection = tight sets of
  // all faces that contain at least one vertex.
  std::set<uint64_t> tights(vmask.begin(), vmask.end());
  while (true) {
    std::set<uint64_t> next = tights;
    for (uint64_t a : tights)
      for (uint64_t b : tights) next.insert(a & b);
    if (next.size() == tights.size()) break;
    tights = std::move(next);
  }

  // Deduplicate faces by their vertex sets and filter the unbounded ones.
  std::set<std::vector<size_t>> seen;
  std::vector<BGTerm> out;
  for (uint64_t s : tights) {
    std::vector<size_t> face_verts;
    uint64_t tight = ~uint64_t(0);
    for (size_t i = 0; i < verts.size(); ++i) {
      if ((vmask[i] & s) == s) {
        face_verts.push_back(i);
        tight &= vmask[i];
      }
    }
    if (face_verts.empty() || !seen.insert(face_verts).second) continue;
    bool unbounded = false;
    for (const Vec& r : gens.rays) {
      bool tight_ray = true;
      for (size_t i = 0; i < hs.size() && tight_ray; ++i)
        if ((tight >> i & 1) && dot(hs[i].normal, r) != 0) tight_ray = false;
      if (tight_ray) {
        unbounded = true;
        break;
      }
    }
    if (unbounded) continue;

    std::vector<Vec> span;
    for (size_t j = 1; j < face_verts.size(); ++j)
      span.push_back(vec_sub(verts[face_verts[j]], verts[face_verts[0]]));
    int fdim = static_cast<int>(rank_of(span));

    Vec witness = zero_vec(dim);
    for (size_t j : face_verts) witness = vec_add(witness, verts[j]);
    witness = vec_scale(Rat(1) / Rat(static_cast<int>(face_verts.size())), witness);

    std::vector<Halfspace> cone_hs;
    for (size_t i = 0; i < hs.size(); ++i)
      if (tight >> i & 1) cone_hs.push_back(Halfspace{hs[i].normal, Rat(0)});
    auto cg = hrep_to_vrep(dim, cone_hs);
    if (!cg) fail(ErrKind::internal, "face tangent cone cannot be empty");

    BGTerm term;
    term.sign = fdim % 2 == 0 ? 1 : -1;
    term.face_dim = fdim;
    term.face_witness = witness;
    term.cone.apex = witness;
    term.cone.generators = sorted_unique(std::move(cg->rays));
    term.cone.lineality = cg->lines;
    for (const Vec& l : extra_lineality) term.cone.lineality.push_back(l);
    if (!extra_lineality.empty()) {
      Mat lm(term.cone.lineality.begin(), term.cone.lineality.end());
      size_t r = rref(lm).size();
      term.cone.lineality.assign(lm.begin(), lm.begin() + r);
    }
    out.push_back(std::move(term));
  }
  std::sort(out.begin(), out.end(), [](const BGTerm& a, const BGTerm& b) {
    if (a.face_dim != b.face_dim) return a.face_dim < b.face_dim;
    return lex_less(a.face_witness, b.face_witness);
  });
  return out;
}

}  // namespace

std::vector<BGTerm> brianchon_gram(const ConvexPolyhedron& p) {
  if (p.is_empty()) return {};
  size_t dim = p.dim();

  // Canonical facet description and generators derived from it.
  std::vector<Halfspace> hs = p.facet_halfspaces();
  auto gens = hrep_to_vrep(dim, hs);
  if (!gens) fail(ErrKind::internal, "nonempty polyhedron lost in canonicalization");

  if (gens->lines.empty()) return brianchon_gram_pointed(dim, hs, *gens, {});

  // Lineality: expand in the quotient, realized as the slice where the
  // pivot coordinates of the lineality basis vanish; every term then
  // carries the lineality space back.
  Mat lm(gens->lines.begin(), gens->lines.end());
  std::vector<size_t> pivots = rref(lm);
  std::vector<Vec> lines(lm.begin(), lm.begin() + pivots.size());
  std::vector<Halfspace> slice_hs = hs;
  for (size_t c : pivots) {
    Vec e = unit_vec(dim, c);
    slice_hs.push_back(Halfspace{e, Rat(0)});
    slice_hs.push_back(Halfspace{vec_neg(e), Rat(0)});
  }
  std::vector<Halfspace> slice_facets =
      vrep_to_hrep(dim, *hrep_to_vrep(dim, slice_hs));
  auto slice_gens = hrep_to_vrep(dim, slice_facets);
  if (!slice_gens || !slice_gens->lines.empty())
    fail(ErrKind::internal, "lineality slice must be pointed and nonempty");
  return brianchon_gram_pointed(dim, slice_facets, *slice_gens, lines);
}

}  // namespace polyvert
