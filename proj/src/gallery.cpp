#include "polyvert/gallery.hpp"

#include <map>

namespace polyvert {

namespace {

Vec rv(std::initializer_list<Rat> xs) { return Vec(xs); }

ConvexPolyhedron hull(size_t dim, std::vector<Vec> pts) {
  GeneratorSet g;
  g.points = std::move(pts);
  return ConvexPolyhedron::from_generators(dim, std::move(g));
}

ConvexPolyhedron sector(const Vec& r1, const Vec& r2) {
  GeneratorSet g;
  g.points = {zero_vec(r1.size())};
  g.rays = {r1, r2};
  return ConvexPolyhedron::from_generators(r1.size(), std::move(g));
}

ConvexPolyhedron box(size_t dim, const Rat& lo, const Rat& hi) {
  std::vector<Halfspace> hs;
  for (size_t i = 0; i < dim; ++i) {
    hs.push_back(Halfspace{vec_neg(unit_vec(dim, i)), -lo});
    hs.push_back(Halfspace{unit_vec(dim, i), hi});
  }
  return ConvexPolyhedron::from_halfspaces(dim, std::move(hs));
}

Scene make_interval() {
  Scene s;
  s.dim = 1;
  s.name = "interval";
  s.terms.push_back({Rat(1), box(1, Rat(0), Rat(1))});
  return s;
}

Scene make_intervals() {
  Scene s;
  s.dim = 1;
  s.name = "intervals";
  s.terms.push_back({Rat(1), hull(1, {rv({Rat(0)}), rv({Rat(1)})})});
  s.terms.push_back({Rat(-1), hull(1, {rv({Rat(2)}), rv({Rat(3)})})});
  return s;
}

Scene make_square() {
  Scene s;
  s.dim = 2;
  s.name = "square";
  s.terms.push_back({Rat(1), box(2, Rat(0), Rat(1))});
  return s;
}

Scene make_cube() {
  Scene s;
  s.dim = 3;
  s.name = "cube";
  s.terms.push_back({Rat(1), box(3, Rat(0), Rat(1))});
  return s;
}

Scene make_lshape() {
  Scene s;
  s.dim = 2;
  s.name = "lshape";
  s.terms.push_back({Rat(1), box(2, Rat(0), Rat(2))});
  s.terms.push_back({Rat(-1), hull(2, {rv({Rat(1), Rat(1)}), rv({Rat(2), Rat(1)}),
                                       rv({Rat(1), Rat(2)}), rv({Rat(2), Rat(2)})})});
  return s;
}

Scene make_triangle() {
  Scene s;
  s.dim = 2;
  s.name = "triangle";
  s.terms.push_back({Rat(1), hull(2, {rv({Rat(0), Rat(0)}), rv({Rat(2), Rat(0)}),
                                      rv({Rat(0), Rat(3)})})});
  return s;
}

Scene make_halfplane() {
  Scene s;
  s.dim = 2;
  s.name = "halfplane";
  s.terms.push_back({Rat(1), ConvexPolyhedron::from_halfspaces(
                                 2, {Halfspace{rv({Rat(0), Rat(-1)}), Rat(0)}})});
  return s;
}

// Three disjoint sectors whose tangent-cone transforms cancel: the sum has
// a geometric corner at the origin but no algebraic vertex.
Scene make_three_sectors() {
  Scene s;
  s.dim = 2;
  s.name = "three-sectors";
  s.terms.push_back({Rat(1), sector(rv({Rat(1), Rat(0)}), rv({Rat(1), Rat(2)}))});
  s.terms.push_back({Rat(1), sector(rv({Rat(0), Rat(1)}), rv({Rat(-1), Rat(0)}))});
  s.terms.push_back({Rat(1), sector(rv({Rat(-1), Rat(-2)}), rv({Rat(0), Rat(-1)}))});
  return s;
}

// Two triangles meeting only at the origin; the shared point is a vertex
// of both pieces and the transforms add rather than cancel.
Scene make_pinch() {
  Scene s;
  s.dim = 2;
  s.name = "pinch";
  s.terms.push_back({Rat(1), hull(2, {rv({Rat(-2), Rat(0)}), rv({Rat(0), Rat(0)}),
                                      rv({Rat(-1), Rat(1)})})});
  s.terms.push_back({Rat(1), hull(2, {rv({Rat(0), Rat(0)}), rv({Rat(2), Rat(0)}),
                                      rv({Rat(1), Rat(-1)})})});
  return s;
}

// Twisted triangular antiprism written as hull minus three corner tetrahedra;
// the difference is a nonconvex solid that admits no convex triangulation of
// its own vertices, but signed decompositions handle it fine.
Scene make_schonhardt() {
  Scene s;
  s.dim = 3;
  s.name = "schonhardt";
  std::vector<Vec> b = {rv({Rat(1), Rat(0), Rat(0)}),
                        rv({Rat(-1) / 2, Rat(7) / 8, Rat(0)}),
                        rv({Rat(-1) / 2, Rat(-7) / 8, Rat(0)})};
  std::vector<Vec> t = {rv({Rat(3) / 5, Rat(4) / 5, Rat(1)}),
                        rv({Rat(-1), Rat(1) / 8, Rat(1)}),
                        rv({Rat(2) / 5, Rat(-37) / 40, Rat(1)})};
  std::vector<Vec> all;
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), t.begin(), t.end());
  s.terms.push_back({Rat(1), hull(3, all)});
  for (size_t i = 0; i < 3; ++i) {
    size_t j = (i + 1) % 3;
    s.terms.push_back({Rat(-1), hull(3, {b[i], b[j], t[i], t[j]})});
  }
  return s;
}

Scene make_random(const std::string& name, size_t dim, size_t npoints, uint64_t seed) {
  Rng rng(seed);
  Scene s;
  s.dim = dim;
  s.name = name;
  s.terms.push_back({Rat(1), random_polytope(dim, npoints, rng)});
  return s;
}

}  // namespace

ConvexPolyhedron random_polytope(size_t dim, size_t npoints, Rng& rng) {
  for (;;) {
    std::vector<Vec> pts;
    for (size_t i = 0; i < npoints; ++i) {
      Vec p(dim);
      for (size_t k = 0; k < dim; ++k) p[k] = Rat(rng.range(-8, 8)) / 4;
      pts.push_back(std::move(p));
    }
    ConvexPolyhedron poly = hull(dim, std::move(pts));
    if (poly.affine_dim() == static_cast<int>(dim)) return poly;
  }
}

std::vector<std::string> gallery_names() {
  return {"interval", "intervals", "square",        "cube",     "lshape",
          "triangle", "halfplane", "three-sectors", "pinch",    "schonhardt",
          "random2d", "random3d-1", "random3d-2"};
}

Scene gallery_scene(const std::string& name) {
  if (name == "interval") return make_interval();
  if (name == "intervals") return make_intervals();
  if (name == "square") return make_square();
  if (name == "cube") return make_cube();
  if (name == "lshape") return make_lshape();
  if (name == "triangle") return make_triangle();
  if (name == "halfplane") return make_halfplane();
  if (name == "three-sectors") return make_three_sectors();
  if (name == "pinch") return make_pinch();
  if (name == "schonhardt") return make_schonhardt();
  if (name == "random2d") return make_random("random2d", 2, 6, 101);
  if (name == "random3d-1") return make_random("random3d-1", 3, 8, 202);
  if (name == "random3d-2") return make_random("random3d-2", 3, 8, 303);
  fail(ErrKind::schema, "unknown gallery scene: " + name);
}

}  // namespace polyvert
