// polyvert: exact algebra of polyhedral indicator functions.
//
// Scenes come from JSON files or the built-in gallery ("gallery:NAME").
// Every command prints a JSON report to stdout; --no-timing makes the
// report byte-for-byte deterministic.

#include "polyvert/decomposition.hpp"
#include "polyvert/gallery.hpp"
#include "polyvert/report.hpp"
#include "polyvert/scene.hpp"
#include "polyvert/transform.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

namespace pv = polyvert;
using pv::json;

namespace {

int exit_code(pv::ErrKind k) {
  switch (k) {
    case pv::ErrKind::schema: return 3;
    case pv::ErrKind::non_rational: return 4;
    case pv::ErrKind::dimension_mismatch: return 5;
    case pv::ErrKind::unbounded: return 6;
    case pv::ErrKind::pole: return 7;
    case pv::ErrKind::io: return 9;
    default: return 1;
  }
}

pv::Scene load_scene(const std::string& src) {
  const std::string prefix = "gallery:";
  if (src.rfind(prefix, 0) == 0) return pv::gallery_scene(src.substr(prefix.size()));
  return pv::parse_scene(pv::load_json_file(src));
}

void emit(pv::Report& rep, const pv::Timer& timer) {
  rep.timing_ms = timer.elapsed_ms();
  std::cout << pv::report_to_json(rep).dump(2) << "\n";
}

json vec_list_json(const std::vector<pv::Vec>& vs) {
  json a = json::array();
  for (const pv::Vec& v : vs) a.push_back(pv::vec_to_json(v));
  return a;
}

// Deterministic non-pole sample points with small integer coordinates.
std::vector<pv::Vec> oracle_points(const pv::TransformSum& ts, size_t dim, size_t count,
                                   uint64_t seed) {
  pv::Rng rng(seed + 17);
  std::vector<pv::Vec> pts;
  while (pts.size() < count) {
    pv::Vec z(dim);
    for (size_t k = 0; k < dim; ++k) z[k] = pv::Rat(rng.range(-4, 4));
    if (pv::is_zero_vec(z)) continue;
    if (std::find(pts.begin(), pts.end(), z) != pts.end()) continue;
    try {
      pv::evaluate_exact(ts, z);
    } catch (const pv::Error&) {
      continue;
    }
    pts.push_back(std::move(z));
  }
  return pts;
}

json decomposition_summary(const pv::SignedDecomposition& dec) {
  json s;
  s["kind"] = dec.kind == pv::SignedDecomposition::Kind::simplices ? "simplices" : "cones";
  if (dec.kind == pv::SignedDecomposition::Kind::simplices) {
    s["terms"] = dec.simplices.size();
  } else {
    s["terms"] = dec.cones.size();
    s["residual_terms"] = dec.residual.size();
    s["residual_transform_zero"] = dec.residual_transform_zero;
  }
  s["certificate"] = dec.certificate;
  s["integer_coefficients"] = dec.integer_coefficients;
  return s;
}

struct VerifyOutcome {
  json details;
  bool ok = false;
};

VerifyOutcome run_verify(const pv::Scene& scene, const json& dec_json, uint64_t seed) {
  pv::PolyhedralFunction f = pv::scene_function(scene);
  pv::SignedDecomposition dec = pv::json_to_decomposition(dec_json, scene.dim);

  VerifyOutcome out;
  pv::PolyhedralFunction g = pv::decomposition_function(scene.dim, dec);
  bool matches = pv::ae_equal(f, g);
  bool minimal = pv::minimality_check(f, dec, seed);
  bool residual_ok = true;
  if (dec.kind == pv::SignedDecomposition::Kind::cones) {
    std::vector<pv::TransformTerm> terms;
    for (const pv::ConeTerm& t : dec.residual) {
      pv::Cone c = pv::canonicalize_cone(t.cone);
      if (!pv::is_line_cone(c)) residual_ok = false;
    }
    // line-cones have zero transform individually, but record the check
    out.details["residual_lines_only"] = residual_ok;
  }
  bool integer_ok = true;
  if (f.integer_weights()) {
    auto integral = [](const pv::Rat& r) { return denominator(r) == 1; };
    for (const pv::SimplexTerm& t : dec.simplices) integer_ok = integer_ok && integral(t.coeff);
    for (const pv::ConeTerm& t : dec.cones) integer_ok = integer_ok && integral(t.coeff);
    for (const pv::ConeTerm& t : dec.residual) integer_ok = integer_ok && integral(t.coeff);
  }
  out.details["function_matches"] = matches;
  out.details["vertex_set_matches"] = minimal;
  out.details["integer_coefficients_preserved"] = integer_ok;
  out.ok = matches && minimal && residual_ok && integer_ok;
  out.details["ok"] = out.ok;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of polyhedral indicator functions"};
  app.require_subcommand(1);
  app.fallthrough(true);  // accept --seed / --no-timing after the subcommand
  app.footer(
      "Exit codes:\n"
      "  0  ok                        5  dimension mismatch\n"
      "  1  internal error            6  unbounded where bounded is required\n"
      "  2  usage                     7  pole at an evaluation point\n"
      "  3  malformed scene           8  verification/certificate failed\n"
      "  4  non-rational number       9  I/O error");

  uint64_t seed = 0;
  bool no_timing = false;
  app.add_option("--seed", seed, "seed for randomized internals (default 0)");
  app.add_flag("--no-timing", no_timing, "omit timing from reports (deterministic output)");

  std::string scene_src, eval_file, out_file, dec_file, mode = "simplices", dump_dir;
  bool check_oracle = false, do_list = false;

  CLI::App* cmd_vertices = app.add_subcommand("vertices", "algebraic and geometric vertices");
  cmd_vertices->add_option("scene", scene_src, "scene file or gallery:NAME")->required();

  CLI::App* cmd_transform = app.add_subcommand("transform", "symbolic Fourier-Laplace transform");
  cmd_transform->add_option("scene", scene_src)->required();
  cmd_transform->add_option("--eval", eval_file, "JSON file with rational evaluation points");
  cmd_transform->add_flag("--check-oracle", check_oracle,
                          "compare against numeric quadrature (bounded scenes)");

  CLI::App* cmd_decompose = app.add_subcommand("decompose", "signed decomposition");
  cmd_decompose->add_option("scene", scene_src)->required();
  cmd_decompose->add_option("--mode", mode, "simplices or cones")
      ->check(CLI::IsMember({"simplices", "cones"}));
  cmd_decompose->add_option("-o,--output", out_file, "write the decomposition JSON here");

  CLI::App* cmd_sections = app.add_subcommand("check-sections",
                                              "zero transform vs vanishing sections");
  cmd_sections->add_option("scene", scene_src)->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "re-check a stored decomposition");
  cmd_verify->add_option("scene", scene_src)->required();
  cmd_verify->add_option("decomposition", dec_file, "decomposition JSON file")->required();

  CLI::App* cmd_gallery = app.add_subcommand("gallery", "built-in scenes");
  cmd_gallery->add_flag("--list", do_list, "list scene names");
  cmd_gallery->add_option("--dump", dump_dir, "write each scene to DIR/NAME.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  pv::Timer timer;
  pv::Report rep;
  rep.with_timing = !no_timing;

  try {
    if (cmd_vertices->parsed()) {
      rep.command = "vertices";
      pv::Scene scene = load_scene(scene_src);
      rep.input_digest = pv::digest_hex(pv::scene_to_json(scene).dump());
      pv::PolyhedralFunction f = pv::scene_function(scene);
      std::vector<pv::Vec> alg = pv::algebraic_vertices(f, seed);
      std::vector<pv::Vec> geo = pv::geometric_vertices(f);
      rep.outputs["dimension"] = scene.dim;
      rep.outputs["algebraic_vertices"] = vec_list_json(alg);
      rep.outputs["geometric_vertices"] = vec_list_json(geo);
      rep.outputs["algebraic_count"] = alg.size();
      rep.outputs["geometric_count"] = geo.size();
      emit(rep, timer);
      return 0;
    }

    if (cmd_transform->parsed()) {
      rep.command = "transform";
      pv::Scene scene = load_scene(scene_src);
      rep.input_digest = pv::digest_hex(pv::scene_to_json(scene).dump());
      pv::PolyhedralFunction f = pv::scene_function(scene);
      pv::TransformSum ts = pv::transform(f);
      rep.outputs["transform"] = pv::transform_to_json(ts);
      rep.outputs["is_zero"] = pv::is_zero(ts, seed);
      bool saw_pole = false;
      if (!eval_file.empty()) {
        json evals = json::array();
        for (const pv::Vec& z : pv::parse_eval_points(pv::load_json_file(eval_file), scene.dim)) {
          json e;
          e["point"] = pv::vec_to_json(z);
          try {
            json classes = json::array();
            for (const auto& [expo, val] : pv::evaluate_exact(ts, z))
              classes.push_back(json::array({pv::rat_to_json(expo), pv::rat_to_json(val)}));
            e["exact"] = std::move(classes);
            e["numeric"] = pv::evaluate_numeric(ts, z);
          } catch (const pv::Error& err) {
            if (err.kind() != pv::ErrKind::pole) throw;
            e["pole"] = true;
            saw_pole = true;
          }
          evals.push_back(std::move(e));
        }
        rep.outputs["evaluations"] = std::move(evals);
        rep.exact = false;  // numeric fields present
      }
      if (check_oracle) {
        json rows = json::array();
        double max_rel = 0.0;
        for (const pv::Vec& z : oracle_points(ts, scene.dim, 5, seed)) {
          double sym = pv::evaluate_numeric(ts, z);
          double orc = pv::quadrature_oracle(f, z);
          double rel = std::abs(sym - orc) / std::max(1.0, std::abs(orc));
          max_rel = std::max(max_rel, rel);
          rows.push_back(json{{"point", pv::vec_to_json(z)},
                              {"symbolic", sym},
                              {"oracle", orc},
                              {"rel_error", rel}});
        }
        rep.outputs["oracle"] = std::move(rows);
        rep.outputs["oracle_max_rel_error"] = max_rel;
        rep.exact = false;
      }
      emit(rep, timer);
      return saw_pole ? exit_code(pv::ErrKind::pole) : 0;
    }

    if (cmd_decompose->parsed()) {
      rep.command = "decompose";
      pv::Scene scene = load_scene(scene_src);
      rep.input_digest = pv::digest_hex(pv::scene_to_json(scene).dump());
      pv::PolyhedralFunction f = pv::scene_function(scene);
      pv::SignedDecomposition dec = mode == "simplices" ? pv::decompose_simplices(f, seed)
                                                        : pv::decompose_cones(f, seed);
      json dec_json = pv::decomposition_to_json(dec);
      rep.outputs["summary"] = decomposition_summary(dec);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) pv::fail(pv::ErrKind::io, "cannot write " + out_file);
        out << dec_json.dump(2) << "\n";
        rep.outputs["written"] = out_file;
      } else {
        rep.outputs["decomposition"] = std::move(dec_json);
      }
      emit(rep, timer);
      return dec.certificate ? 0 : 8;
    }

    if (cmd_sections->parsed()) {
      rep.command = "check-sections";
      pv::Scene scene = load_scene(scene_src);
      rep.input_digest = pv::digest_hex(pv::scene_to_json(scene).dump());
      pv::PolyhedralFunction f = pv::scene_function(scene);
      pv::SectionCriterionReport rpt = pv::check_section_criterion(f, f.planes, seed);
      json sections = json::array();
      for (const pv::SectionCheck& s : rpt.sections)
        sections.push_back(json{{"normal", pv::vec_to_json(s.plane.normal)},
                                {"offset", pv::rat_to_json(s.plane.offset)},
                                {"section_transform_zero", s.section_transform_zero}});
      rep.outputs["transform_zero"] = rpt.transform_zero;
      rep.outputs["sections"] = std::move(sections);
      rep.outputs["all_sections_zero"] = rpt.all_sections_zero;
      rep.outputs["biconditional_holds"] = rpt.biconditional_holds;
      emit(rep, timer);
      return rpt.biconditional_holds ? 0 : 8;
    }

    if (cmd_verify->parsed()) {
      rep.command = "verify";
      pv::Scene scene = load_scene(scene_src);
      rep.input_digest = pv::digest_hex(pv::scene_to_json(scene).dump());
      VerifyOutcome out = run_verify(scene, pv::load_json_file(dec_file), seed);
      rep.outputs = std::move(out.details);
      emit(rep, timer);
      return out.ok ? 0 : 8;
    }

    if (cmd_gallery->parsed()) {
      rep.command = "gallery";
      rep.input_digest = pv::digest_hex("gallery");
      if (!dump_dir.empty()) {
        json written = json::array();
        for (const std::string& name : pv::gallery_names()) {
          std::string path = dump_dir + "/" + name + ".json";
          std::ofstream out(path);
          if (!out) pv::fail(pv::ErrKind::io, "cannot write " + path);
          out << pv::scene_to_json(pv::gallery_scene(name)).dump(2) << "\n";
          written.push_back(path);
        }
        rep.outputs["written"] = std::move(written);
      } else {
        rep.outputs["scenes"] = pv::gallery_names();
        (void)do_list;  // listing is the default
      }
      emit(rep, timer);
      return 0;
    }
  } catch (const pv::Error& e) {
    json err;
    err["error"] = e.what();
    err["command"] = rep.command;
    std::cerr << err.dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 2;
}
