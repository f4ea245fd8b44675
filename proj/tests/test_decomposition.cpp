#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyvert/decomposition.hpp"
#include "polyvert/gallery.hpp"
#include "polyvert/scene.hpp"

using namespace polyvert;

namespace {

Vec v2(const Rat& a, const Rat& b) { return Vec{a, b}; }

PolyhedralFunction fun(const std::string& name) { return scene_function(gallery_scene(name)); }

ConvexPolyhedron quadrant_poly() {
  return ConvexPolyhedron::from_halfspaces(2, {Halfspace{v2(Rat(-1), Rat(0)), Rat(0)},
                                               Halfspace{v2(Rat(0), Rat(-1)), Rat(0)}});
}

}  // namespace

TEST_CASE("algebraic vertices of convex scenes") {
  std::vector<Vec> sq = algebraic_vertices(fun("square"));
  std::vector<Vec> expect = {v2(Rat(0), Rat(0)), v2(Rat(0), Rat(1)), v2(Rat(1), Rat(0)),
                             v2(Rat(1), Rat(1))};
  CHECK(sq == expect);
  CHECK(algebraic_vertices(fun("lshape")).size() == 6);
  CHECK(algebraic_vertices(fun("cube")).size() == 8);
}

TEST_CASE("algebraic vs geometric vertices can differ") {
  PolyhedralFunction f = fun("three-sectors");
  CHECK(algebraic_vertices(f).empty());
  std::vector<Vec> geo = geometric_vertices(f);
  REQUIRE(geo.size() == 1);
  CHECK(geo[0] == v2(Rat(0), Rat(0)));

  // on the nonconvex pinch scene the two notions agree
  PolyhedralFunction p = fun("pinch");
  CHECK(algebraic_vertices(p) == geometric_vertices(p));
  CHECK(algebraic_vertices(p).size() == 5);
}

TEST_CASE("vertex sets are independent of the seed") {
  PolyhedralFunction f = fun("lshape");
  CHECK(algebraic_vertices(f, 0) == algebraic_vertices(f, 999));
  PolyhedralFunction g = fun("three-sectors");
  CHECK(algebraic_vertices(g, 7) == algebraic_vertices(g, 8));
}

TEST_CASE("simplex decomposition of the square") {
  SignedDecomposition dec = decompose_simplices(fun("square"));
  CHECK(dec.certificate);
  CHECK(dec.integer_coefficients);
  REQUIRE(dec.simplices.size() == 2);
  for (const SimplexTerm& t : dec.simplices) {
    CHECK(t.coeff == Rat(1));
    CHECK(t.simplex.size() == 3);
  }
}

TEST_CASE("simplex decomposition of the L-shape") {
  PolyhedralFunction f = fun("lshape");
  SignedDecomposition dec = decompose_simplices(f);
  CHECK(dec.certificate);
  CHECK(dec.integer_coefficients);
  CHECK(dec.simplices.size() == 4);

  // corners of the simplices = algebraic vertices, both directions
  CHECK(minimality_check(f, dec));
  std::vector<Vec> corners;
  for (const SimplexTerm& t : dec.simplices)
    corners.insert(corners.end(), t.simplex.begin(), t.simplex.end());
  CHECK(sorted_unique(std::move(corners)) == algebraic_vertices(f));

  // reassembly is exact
  CHECK(ae_equal(f, decomposition_function(2, dec)));
}

TEST_CASE("simplex decomposition with rational weights") {
  PolyhedralFunction f = scale(fun("square"), Rat(1) / 2);
  SignedDecomposition dec = decompose_simplices(f);
  CHECK(dec.certificate);
  CHECK(!dec.integer_coefficients);
  for (const SimplexTerm& t : dec.simplices) CHECK(t.coeff == Rat(1) / 2);
}

TEST_CASE("simplex decomposition requires bounded support") {
  CHECK_THROWS_AS(decompose_simplices(fun("halfplane")), Error);
}

TEST_CASE("cone decomposition of the square") {
  PolyhedralFunction f = fun("square");
  SignedDecomposition dec = decompose_cones(f);
  CHECK(dec.certificate);
  CHECK(dec.residual_transform_zero);
  CHECK(dec.cones.size() == 4);
  CHECK(dec.residual.size() == 5);
  for (const ConeTerm& t : dec.cones) {
    CHECK(t.coeff == Rat(1));
    CHECK(!is_line_cone(t.cone));
  }
  for (const ConeTerm& t : dec.residual) CHECK(is_line_cone(t.cone));
  CHECK(ae_equal(f, decomposition_function(2, dec)));
}

TEST_CASE("cone decomposition of a quadrant has empty residual") {
  PolyhedralFunction f = from_weighted_union(2, {{Rat(1), quadrant_poly()}});
  SignedDecomposition dec = decompose_cones(f);
  CHECK(dec.certificate);
  REQUIRE(dec.cones.size() == 1);
  CHECK(dec.cones[0].coeff == Rat(1));
  CHECK(dec.cones[0].cone.apex == v2(Rat(0), Rat(0)));
  CHECK(dec.residual.empty());
}

TEST_CASE("cone decomposition with no algebraic vertices") {
  PolyhedralFunction f = fun("three-sectors");
  SignedDecomposition dec = decompose_cones(f);
  CHECK(dec.certificate);
  CHECK(dec.cones.empty());
  CHECK(!dec.residual.empty());
  CHECK(dec.residual_transform_zero);
  CHECK(ae_equal(f, decomposition_function(2, dec)));

  PolyhedralFunction hp = fun("halfplane");
  SignedDecomposition hdec = decompose_cones(hp);
  CHECK(hdec.certificate);
  CHECK(hdec.cones.empty());
  REQUIRE(hdec.residual.size() == 1);
  CHECK(hdec.residual[0].coeff == Rat(1));
  CHECK(ae_equal(hp, decomposition_function(2, hdec)));
}

TEST_CASE("tangent cones at algebraic vertices reappear in the decomposition") {
  PolyhedralFunction f = fun("lshape");
  SignedDecomposition dec = decompose_cones(f);
  CHECK(dec.certificate);

  // apexes of the emitted cones = algebraic vertices
  std::vector<Vec> apexes;
  for (const ConeTerm& t : dec.cones) apexes.push_back(t.cone.apex);
  CHECK(sorted_unique(std::move(apexes)) == algebraic_vertices(f));

  // the notch vertex carries its three quadrant cells
  int notch_terms = 0;
  for (const ConeTerm& t : dec.cones)
    if (t.cone.apex == v2(Rat(1), Rat(1))) ++notch_terms;
  CHECK(notch_terms == 3);
}

TEST_CASE("minimality check rejects padded decompositions") {
  PolyhedralFunction f = fun("square");
  SignedDecomposition dec = decompose_simplices(f);
  REQUIRE(dec.certificate);

  // add a cancelling pair of simplices with a foreign vertex: the function
  // is unchanged a.e. but the vertex set is no longer minimal
  SimplexTerm extra;
  extra.coeff = Rat(1);
  extra.simplex = {v2(Rat(5), Rat(5)), v2(Rat(6), Rat(5)), v2(Rat(5), Rat(6))};
  SimplexTerm cancel = extra;
  cancel.coeff = Rat(-1);
  dec.simplices.push_back(extra);
  dec.simplices.push_back(cancel);
  CHECK(ae_equal(f, decomposition_function(2, dec)));
  CHECK(!minimality_check(f, dec));
}

TEST_CASE("section criterion biconditional") {
  PolyhedralFunction zero_side = fun("three-sectors");
  SectionCriterionReport a = check_section_criterion(zero_side, zero_side.planes);
  CHECK(a.transform_zero);
  CHECK(a.all_sections_zero);
  CHECK(a.biconditional_holds);
  CHECK(!a.hard_violation);

  PolyhedralFunction nonzero_side = fun("lshape");
  SectionCriterionReport b = check_section_criterion(nonzero_side, nonzero_side.planes);
  CHECK(!b.transform_zero);
  CHECK(!b.all_sections_zero);
  CHECK(b.biconditional_holds);
  CHECK(!b.hard_violation);

  // sections across non-generating planes vanish and do not disturb the check
  std::vector<OrientedHyperplane> extra = nonzero_side.planes;
  extra.push_back(make_hyperplane(v2(Rat(1), Rat(1)), Rat(-77)));
  SectionCriterionReport c = check_section_criterion(nonzero_side, extra);
  CHECK(!c.transform_zero);
  CHECK(!c.all_sections_zero);
  CHECK(c.biconditional_holds);
}

TEST_CASE("three dimensional end-to-end decomposition") {
  PolyhedralFunction f = fun("schonhardt");
  SignedDecomposition dec = decompose_simplices(f);
  CHECK(dec.certificate);
  CHECK(dec.integer_coefficients);
  CHECK(dec.simplices.size() == 4);
  CHECK(minimality_check(f, dec));

  Rat negative = 0;
  for (const SimplexTerm& t : dec.simplices)
    if (t.coeff < 0) negative += t.coeff;
  CHECK(negative < 0);  // nonconvex: some simplex must enter negatively
}
