// Scene files and JSON serialization.  A scene is a weighted list of
// convex polyhedra, each given by halfspaces or by generators; every
// number is an exact rational, serialized canonically as "p/q".
#pragma once

#include "polyvert/decomposition.hpp"
#include "polyvert/polyfun.hpp"
#include "polyvert/transform.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polyvert {

using json = nlohmann::json;

struct SceneTerm {
  Rat coeff;
  ConvexPolyhedron piece;
};

struct Scene {
  size_t dim = 0;
  std::string name;
  std::vector<SceneTerm> terms;
};

// Strict parsing: unknown/missing fields and non-rational numbers are
// schema errors; every vector must match the scene dimension.
Scene parse_scene(const json& j);
json scene_to_json(const Scene& s);

PolyhedralFunction scene_function(const Scene& s);

// rationals / vectors
Rat json_to_rat(const json& j);
json rat_to_json(const Rat& r);
Vec json_to_vec(const json& j, size_t dim);
json vec_to_json(const Vec& v);

// transforms
json transform_to_json(const TransformSum& ts);

// cones and decompositions
json cone_to_json(const Cone& c);
Cone json_to_cone(const json& j, size_t dim);
json decomposition_to_json(const SignedDecomposition& dec);
SignedDecomposition json_to_decomposition(const json& j, size_t dim);

// evaluation points file: {"points": [[z_1, ..., z_d], ...]}
std::vector<Vec> parse_eval_points(const json& j, size_t dim);

json load_json_file(const std::string& path);

}  // namespace polyvert
