#include "polyvert/scene.hpp"

#include <fstream>

namespace polyvert {

Rat json_to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_float())
    fail(ErrKind::non_rational, "floating point literal where a rational is required: " + j.dump());
  fail(ErrKind::schema, "expected a rational (integer or \"p/q\" string), got " + j.dump());
}

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Vec json_to_vec(const json& j, size_t dim) {
  if (!j.is_array()) fail(ErrKind::schema, "expected an array for a vector, got " + j.dump());
  if (j.size() != dim)
    fail(ErrKind::dimension_mismatch,
         "vector of length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
  Vec v(dim);
  for (size_t i = 0; i < dim; ++i) v[i] = json_to_rat(j[i]);
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

namespace {

ConvexPolyhedron parse_polyhedron(const json& j, size_t dim) {
  if (!j.is_object()) fail(ErrKind::schema, "polyhedron must be an object");
  if (j.contains("halfspaces")) {
    const json& rows = j.at("halfspaces");
    if (!rows.is_array()) fail(ErrKind::schema, "halfspaces must be an array");
    std::vector<Halfspace> hs;
    for (const json& row : rows) {
      if (!row.is_array()) fail(ErrKind::schema, "halfspace rows are [a_1, ..., a_d, b]");
      if (row.size() != dim + 1)
        fail(ErrKind::dimension_mismatch, "halfspace rows are [a_1, ..., a_d, b]");
      Vec n(dim);
      for (size_t i = 0; i < dim; ++i) n[i] = json_to_rat(row[i]);
      hs.push_back(Halfspace{std::move(n), json_to_rat(row[dim])});
    }
    return ConvexPolyhedron::from_halfspaces(dim, std::move(hs));
  }
  if (j.contains("vertices") || j.contains("rays") || j.contains("lines")) {
    GeneratorSet g;
    auto read = [&](const char* key, std::vector<Vec>& out) {
      if (!j.contains(key)) return;
      const json& rows = j.at(key);
      if (!rows.is_array()) fail(ErrKind::schema, std::string(key) + " must be an array");
      for (const json& row : rows) out.push_back(json_to_vec(row, dim));
    };
    read("vertices", g.points);
    read("rays", g.rays);
    read("lines", g.lines);
    return ConvexPolyhedron::from_generators(dim, std::move(g));
  }
  fail(ErrKind::schema, "polyhedron needs \"halfspaces\" or \"vertices\"/\"rays\"");
}

json polyhedron_to_json(const ConvexPolyhedron& p) {
  json j = json::object();
  if (p.has_hrep()) {
    json rows = json::array();
    for (const Halfspace& h : p.hrep()) {
      json row = json::array();
      for (const Rat& x : h.normal) row.push_back(rat_to_json(x));
      row.push_back(rat_to_json(h.offset));
      rows.push_back(std::move(row));
    }
    j["halfspaces"] = std::move(rows);
    return j;
  }
  const GeneratorSet& g = p.vrep();
  json verts = json::array(), rays = json::array(), lines = json::array();
  for (const Vec& v : g.points) verts.push_back(vec_to_json(v));
  for (const Vec& v : g.rays) rays.push_back(vec_to_json(v));
  for (const Vec& v : g.lines) lines.push_back(vec_to_json(v));
  j["vertices"] = std::move(verts);
  if (!g.rays.empty()) j["rays"] = std::move(rays);
  if (!g.lines.empty()) j["lines"] = std::move(lines);
  return j;
}

}  // namespace

Scene parse_scene(const json& j) {
  if (!j.is_object()) fail(ErrKind::schema, "scene must be a JSON object");
  if (!j.contains("dimension") || !j.at("dimension").is_number_integer())
    fail(ErrKind::schema, "scene needs an integer \"dimension\"");
  long dim = j.at("dimension").get<long>();
  if (dim < 1 || dim > 16) fail(ErrKind::schema, "dimension out of range [1, 16]");
  Scene s;
  s.dim = static_cast<size_t>(dim);
  s.name = j.value("name", std::string{});
  if (!j.contains("terms") || !j.at("terms").is_array())
    fail(ErrKind::schema, "scene needs a \"terms\" array");
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coefficient") || !t.contains("polyhedron"))
      fail(ErrKind::schema, "each term needs \"coefficient\" and \"polyhedron\"");
    SceneTerm term{json_to_rat(t.at("coefficient")), parse_polyhedron(t.at("polyhedron"), s.dim)};
    s.terms.push_back(std::move(term));
  }
  return s;
}

json scene_to_json(const Scene& s) {
  json j;
  j["dimension"] = s.dim;
  if (!s.name.empty()) j["name"] = s.name;
  json terms = json::array();
  for (const SceneTerm& t : s.terms) {
    json jt;
    jt["coefficient"] = rat_to_json(t.coeff);
    jt["polyhedron"] = polyhedron_to_json(t.piece);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyhedralFunction scene_function(const Scene& s) {
  std::vector<std::pair<Rat, ConvexPolyhedron>> pieces;
  for (const SceneTerm& t : s.terms) pieces.emplace_back(t.coeff, t.piece);
  return from_weighted_union(s.dim, pieces);
}

json transform_to_json(const TransformSum& ts) {
  json j;
  j["dimension"] = ts.dim;
  json terms = json::array();
  for (const TransformTerm& t : ts.terms) {
    json jt;
    jt["coeff"] = rat_to_json(t.coeff);
    jt["vertex"] = vec_to_json(t.vertex);
    json forms = json::array();
    for (const Vec& f : t.forms) forms.push_back(vec_to_json(f));
    jt["forms"] = std::move(forms);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

json cone_to_json(const Cone& c) {
  json j;
  j["apex"] = vec_to_json(c.apex);
  json gens = json::array(), lin = json::array();
  for (const Vec& g : c.generators) gens.push_back(vec_to_json(g));
  for (const Vec& l : c.lineality) lin.push_back(vec_to_json(l));
  j["generators"] = std::move(gens);
  j["lineality"] = std::move(lin);
  return j;
}

Cone json_to_cone(const json& j, size_t dim) {
  if (!j.is_object() || !j.contains("apex"))
    fail(ErrKind::schema, "cone needs \"apex\", \"generators\", \"lineality\"");
  Cone c;
  c.apex = json_to_vec(j.at("apex"), dim);
  for (const json& g : j.value("generators", json::array())) c.generators.push_back(json_to_vec(g, dim));
  for (const json& l : j.value("lineality", json::array())) c.lineality.push_back(json_to_vec(l, dim));
  return c;
}

json decomposition_to_json(const SignedDecomposition& dec) {
  json j;
  if (dec.kind == SignedDecomposition::Kind::simplices) {
    j["kind"] = "simplices";
    json terms = json::array();
    for (const SimplexTerm& t : dec.simplices) {
      json jt;
      jt["coefficient"] = rat_to_json(t.coeff);
      json simplex = json::array();
      for (const Vec& v : t.simplex) simplex.push_back(vec_to_json(v));
      jt["simplex"] = std::move(simplex);
      terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
  } else {
    j["kind"] = "cones";
    json terms = json::array(), residual = json::array();
    for (const ConeTerm& t : dec.cones)
      terms.push_back(json{{"coefficient", rat_to_json(t.coeff)}, {"cone", cone_to_json(t.cone)}});
    for (const ConeTerm& t : dec.residual)
      residual.push_back(json{{"coefficient", rat_to_json(t.coeff)}, {"cone", cone_to_json(t.cone)}});
    j["terms"] = std::move(terms);
    j["residual"] = std::move(residual);
    j["residual_transform_zero"] = dec.residual_transform_zero;
  }
  j["certificate"] = dec.certificate;
  j["integer_coefficients"] = dec.integer_coefficients;
  return j;
}

SignedDecomposition json_to_decomposition(const json& j, size_t dim) {
  if (!j.is_object() || !j.contains("kind"))
    fail(ErrKind::schema, "decomposition needs a \"kind\"");
  SignedDecomposition dec;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "simplices") {
    dec.kind = SignedDecomposition::Kind::simplices;
    for (const json& t : j.value("terms", json::array())) {
      SimplexTerm st;
      st.coeff = json_to_rat(t.at("coefficient"));
      for (const json& v : t.at("simplex")) st.simplex.push_back(json_to_vec(v, dim));
      dec.simplices.push_back(std::move(st));
    }
  } else if (kind == "cones") {
    dec.kind = SignedDecomposition::Kind::cones;
    for (const json& t : j.value("terms", json::array()))
      dec.cones.push_back(ConeTerm{json_to_rat(t.at("coefficient")), json_to_cone(t.at("cone"), dim)});
    for (const json& t : j.value("residual", json::array()))
      dec.residual.push_back(ConeTerm{json_to_rat(t.at("coefficient")), json_to_cone(t.at("cone"), dim)});
  } else {
    fail(ErrKind::schema, "unknown decomposition kind: " + kind);
  }
  dec.certificate = j.value("certificate", false);
  dec.integer_coefficients = j.value("integer_coefficients", false);
  dec.residual_transform_zero = j.value("residual_transform_zero", true);
  return dec;
}

std::vector<Vec> parse_eval_points(const json& j, size_t dim) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    fail(ErrKind::schema, "evaluation file needs a \"points\" array");
  std::vector<Vec> out;
  for (const json& p : j.at("points")) out.push_back(json_to_vec(p, dim));
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrKind::schema, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace polyvert
