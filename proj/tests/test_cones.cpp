#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyvert/cones.hpp"
#include "polyvert/gallery.hpp"
#include "polyvert/scene.hpp"
#include "polyvert/triangulate.hpp"

using namespace polyvert;

namespace {

Vec v2(const Rat& a, const Rat& b) { return Vec{a, b}; }
Vec v3(const Rat& a, const Rat& b, const Rat& c) { return Vec{a, b, c}; }

ConvexPolyhedron unit_square_poly() {
  std::vector<Halfspace> hs;
  for (size_t i = 0; i < 2; ++i) {
    hs.push_back(Halfspace{vec_neg(unit_vec(2, i)), Rat(0)});
    hs.push_back(Halfspace{unit_vec(2, i), Rat(1)});
  }
  return ConvexPolyhedron::from_halfspaces(2, hs);
}

PolyhedralFunction reassemble(size_t dim, const std::vector<BGTerm>& terms) {
  std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
  for (const BGTerm& t : terms) pieces.emplace_back(Rat(t.sign), cone_to_polyhedron(t.cone));
  return from_weighted_union(dim, pieces);
}

}  // namespace

TEST_CASE("tangent cones of a square") {
  ConvexPolyhedron sq = unit_square_poly();

  Cone corner = canonicalize_cone(tangent_cone_of_polyhedron(sq, v2(Rat(0), Rat(0))));
  CHECK(corner.generators == std::vector<Vec>{v2(Rat(0), Rat(1)), v2(Rat(1), Rat(0))});
  CHECK(corner.lineality.empty());
  CHECK(cone_dim(corner) == 2);
  CHECK(!is_line_cone(corner));

  Cone edge = canonicalize_cone(tangent_cone_of_polyhedron(sq, v2(Rat(1) / 2, Rat(0))));
  CHECK(edge.generators == std::vector<Vec>{v2(Rat(0), Rat(1))});
  CHECK(edge.lineality.size() == 1);
  CHECK(is_line_cone(edge));

  Cone inside = canonicalize_cone(tangent_cone_of_polyhedron(sq, v2(Rat(1) / 2, Rat(1) / 2)));
  CHECK(inside.generators.empty());
  CHECK(inside.lineality.size() == 2);
}

TEST_CASE("cone canonicalization absorbs opposite rays") {
  Cone c;
  c.apex = v2(Rat(3), Rat(7));
  c.generators = {v2(Rat(0), Rat(1)), v2(Rat(1), Rat(0)), v2(Rat(-1), Rat(0))};
  Cone cc = canonicalize_cone(c);
  CHECK(cc.generators == std::vector<Vec>{v2(Rat(0), Rat(1))});
  CHECK(cc.lineality.size() == 1);
  CHECK(is_line_cone(cc));
  CHECK(cc.apex == c.apex);
}

TEST_CASE("dual cone") {
  Cone q;
  q.apex = v2(Rat(0), Rat(0));
  q.generators = {v2(Rat(1), Rat(0)), v2(Rat(0), Rat(1))};
  Cone d = dual_cone(q);
  // polar of the first quadrant is the third quadrant
  CHECK(sorted_unique(d.generators) ==
        std::vector<Vec>{v2(Rat(-1), Rat(0)), v2(Rat(0), Rat(-1))});
  CHECK(d.lineality.empty());

  // dual of a halfplane cone is a ray
  Cone h;
  h.apex = v2(Rat(0), Rat(0));
  h.generators = {v2(Rat(0), Rat(1))};
  h.lineality = {v2(Rat(1), Rat(0))};
  Cone dh = dual_cone(h);
  CHECK(dh.generators == std::vector<Vec>{v2(Rat(0), Rat(-1))});
}

TEST_CASE("local cone structure of a polyhedral function") {
  PolyhedralFunction f = scene_function(gallery_scene("lshape"));

  PolyconicalFunction at_notch = tangent_cone(f, v2(Rat(1), Rat(1)));
  CHECK(at_notch.terms.size() == 3);
  for (const WeightedCone& wc : at_notch.terms) CHECK(wc.weight == Rat(1));

  PolyhedralFunction local = polyconical_to_function(at_notch);
  CHECK(weight_at_interior(local, v2(Rat(1) / 2, Rat(1) / 2)) == Rat(1));
  CHECK(weight_at_interior(local, v2(Rat(3) / 2, Rat(3) / 2)) == Rat(0));
  CHECK(weight_at_interior(local, v2(Rat(3) / 2, Rat(1) / 2)) == Rat(1));

  CHECK(tangent_cone(f, v2(Rat(10), Rat(10))).is_zero());

  // at an edge midpoint the local model is a halfplane
  PolyconicalFunction at_edge = tangent_cone(f, v2(Rat(1) / 2, Rat(0)));
  PolyhedralFunction edge_fun = polyconical_to_function(at_edge);
  CHECK(weight_at_interior(edge_fun, v2(Rat(1) / 2, Rat(1) / 2)) == Rat(1));
  CHECK(weight_at_interior(edge_fun, v2(Rat(1) / 2, Rat(-1) / 2)) == Rat(0));
}

TEST_CASE("Brianchon-Gram on a square") {
  std::vector<BGTerm> terms = brianchon_gram(unit_square_poly());
  REQUIRE(terms.size() == 9);
  int by_dim[3] = {0, 0, 0};
  for (const BGTerm& t : terms) {
    REQUIRE(t.face_dim >= 0);
    REQUIRE(t.face_dim <= 2);
    by_dim[t.face_dim]++;
    CHECK(t.sign == (t.face_dim % 2 == 0 ? 1 : -1));
  }
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 1);

  PolyhedralFunction lhs = from_weighted_union(2, {{Rat(1), unit_square_poly()}});
  CHECK(ae_equal(lhs, reassemble(2, terms)));
}

TEST_CASE("Brianchon-Gram on pointed unbounded polyhedra") {
  // quadrant: the only bounded face is the vertex
  GeneratorSet q;
  q.points = {v2(Rat(0), Rat(0))};
  q.rays = {v2(Rat(1), Rat(0)), v2(Rat(0), Rat(1))};
  ConvexPolyhedron quadrant = ConvexPolyhedron::from_generators(2, q);
  std::vector<BGTerm> qt = brianchon_gram(quadrant);
  REQUIRE(qt.size() == 1);
  CHECK(qt[0].sign == 1);
  CHECK(qt[0].face_dim == 0);

  // truncated quadrant x,y >= 0, x+y >= 1: two vertices and one bounded edge
  std::vector<Halfspace> hs = {Halfspace{v2(Rat(-1), Rat(0)), Rat(0)},
                               Halfspace{v2(Rat(0), Rat(-1)), Rat(0)},
                               Halfspace{v2(Rat(-1), Rat(-1)), Rat(-1)}};
  ConvexPolyhedron trunc = ConvexPolyhedron::from_halfspaces(2, hs);
  std::vector<BGTerm> tt = brianchon_gram(trunc);
  REQUIRE(tt.size() == 3);
  PolyhedralFunction lhs = from_weighted_union(2, {{Rat(1), trunc}});
  CHECK(ae_equal(lhs, reassemble(2, tt)));
}

TEST_CASE("Brianchon-Gram with lineality") {
  // horizontal strip 0 <= y <= 1: expansion in the quotient line
  std::vector<Halfspace> hs = {Halfspace{v2(Rat(0), Rat(-1)), Rat(0)},
                               Halfspace{v2(Rat(0), Rat(1)), Rat(1)}};
  ConvexPolyhedron strip = ConvexPolyhedron::from_halfspaces(2, hs);
  std::vector<BGTerm> st = brianchon_gram(strip);
  REQUIRE(st.size() == 3);
  for (const BGTerm& t : st) CHECK(is_line_cone(t.cone));
  PolyhedralFunction lhs = from_weighted_union(2, {{Rat(1), strip}});
  CHECK(ae_equal(lhs, reassemble(2, st)));

  // halfplane: single term, itself
  ConvexPolyhedron hp = ConvexPolyhedron::from_halfspaces(
      2, {Halfspace{v2(Rat(0), Rat(-1)), Rat(0)}});
  std::vector<BGTerm> ht = brianchon_gram(hp);
  REQUIRE(ht.size() == 1);
  CHECK(ht[0].sign == 1);
  CHECK(is_line_cone(ht[0].cone));
  CHECK(ae_equal(from_weighted_union(2, {{Rat(1), hp}}), reassemble(2, ht)));
}

TEST_CASE("star reduction identities") {
  Cone c;
  c.apex = v2(Rat(0), Rat(0));
  c.generators = {v2(Rat(1), Rat(0)), v2(Rat(0), Rat(1))};

  // already on the positive side: nothing happens
  StarReduction same = star_reduction(c, v2(Rat(1), Rat(1)));
  CHECK(same.sign == 1);
  CHECK(same.line_cones.empty());
  CHECK(canonicalize_cone(same.star).generators == canonicalize_cone(c).generators);

  // one flip: [c] = -[c*] + [line-cone]
  StarReduction one = star_reduction(c, v2(Rat(-1), Rat(1)));
  CHECK(one.sign == -1);
  REQUIRE(one.line_cones.size() == 1);
  CHECK(one.line_cones[0].first == 1);
  for (const Vec& w : one.star.generators) CHECK(dot(v2(Rat(-1), Rat(1)), w) > 0);

  std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
  pieces.emplace_back(Rat(-one.sign), cone_to_polyhedron(one.star));
  for (const auto& [sg, lc] : one.line_cones)
    pieces.emplace_back(Rat(-sg), cone_to_polyhedron(lc));
  pieces.emplace_back(Rat(1), cone_to_polyhedron(c));
  CHECK(from_weighted_union(2, pieces).is_zero());

  // orthogonal direction is rejected
  CHECK_THROWS_AS(star_reduction(c, v2(Rat(0), Rat(1))), Error);
}

TEST_CASE("polytope triangulation") {
  // square: two triangles; cube: six tetrahedra, volumes sum to 1
  GeneratorSet sq;
  sq.points = {v2(Rat(0), Rat(0)), v2(Rat(1), Rat(0)), v2(Rat(0), Rat(1)), v2(Rat(1), Rat(1))};
  auto tri2 = triangulate_polytope(ConvexPolyhedron::from_generators(2, sq));
  CHECK(tri2.size() == 2);

  GeneratorSet cu;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cu.points.push_back(v3(Rat(x), Rat(y), Rat(z)));
  auto tri3 = triangulate_polytope(ConvexPolyhedron::from_generators(3, cu));
  CHECK(tri3.size() == 6);
  Rat vol = 0;
  for (const Simplex& s : tri3) vol += abs(simplex_det(s)) / 6;
  CHECK(vol == Rat(1));
}

TEST_CASE("cone triangulation") {
  Cone c;
  c.apex = v3(Rat(0), Rat(0), Rat(0));
  c.generators = {v3(Rat(1), Rat(1), Rat(1)), v3(Rat(1), Rat(-1), Rat(1)),
                  v3(Rat(-1), Rat(1), Rat(1)), v3(Rat(-1), Rat(-1), Rat(1))};
  ConeTriangulation t = triangulate_cone(c);
  CHECK(!t.line_cone);
  CHECK(!t.degenerate);
  CHECK(t.pieces.size() == 2);
  for (const Cone& piece : t.pieces) CHECK(piece.generators.size() == 3);

  Cone hp;
  hp.apex = v2(Rat(0), Rat(0));
  hp.generators = {v2(Rat(0), Rat(1)), v2(Rat(1), Rat(0)), v2(Rat(-1), Rat(0))};
  CHECK(triangulate_cone(hp).line_cone);

  Cone ray;
  ray.apex = v2(Rat(0), Rat(0));
  ray.generators = {v2(Rat(1), Rat(2))};
  CHECK(triangulate_cone(ray).degenerate);
}
