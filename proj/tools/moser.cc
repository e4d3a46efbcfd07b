// moser: command-line front end.
//
// Exit status: 0 on success, 1 when a check or experiment fails, 2 on an
// error (printed as "error[kind]: message").

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moser/constructions.h"
#include "moser/experiments.h"
#include "moser/generators.h"
#include "moser/gnomonic.h"
#include "moser/io.h"
#include "moser/planar.h"
#include "moser/shadow.h"
#include "moser/silhouette.h"
#include "moser/spherical.h"
#include "moser/svg.h"
#include "moser/sweep.h"

using namespace moser;

namespace {

struct Global {
  uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    write_file(g.out, text);
  }
}

// Scalar fields of an object as a two-line CSV.
std::string flat_csv(const Json& j) {
  std::string head, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_structured()) continue;
    head += (head.empty() ? "" : ",") + it.key();
    row += (row.empty() ? "" : ",") + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return head + "\n" + row + "\n";
}

void emit_json(const Global& g, const Json& j) {
  emit(g, g.format == "csv" ? flat_csv(j) : j.dump(2) + "\n");
}

std::vector<ExactRatio> parse_list(const std::string& text, size_t n, const std::string& what) {
  std::vector<ExactRatio> v;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) v.push_back(ExactRatio::parse(tok));
  if (v.size() != n) {
    throw Error(ErrorKind::kParse, what + " needs " + std::to_string(n) + " comma-separated values");
  }
  return v;
}

PlanarLine parse_line(const std::string& text) {
  std::vector<ExactRatio> v = parse_list(text, 3, "--line");
  return PlanarLine::from_coefficients(v[0], v[1], v[2]);
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

bool is_polyhedron_file(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  return i != std::string::npos && (text.compare(i, 5, "VPOLY") == 0 || text.compare(i, 5, "HPOLY") == 0);
}

PlanarSubdivision load_planar(const std::string& path) { return planar_from_json(load_json(path)); }

// A spherical JSON file, or the spherical image of a polyhedron file.
SphericalSubdivision load_spherical(const std::string& path) {
  std::string text = read_file(path);
  if (is_polyhedron_file(text)) return spherical_image(read_polyhedron(text));
  try {
    return spherical_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

Json witness_json(const DirectionWitness& w) {
  return {{"count", w.count}, {"witness", to_json(w.direction)}, {"boundary_edges", w.boundary_edges}};
}

Json checks_json(const std::vector<NamedCheck>& checks) {
  Json a = Json::array();
  for (const NamedCheck& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shadows, silhouettes and stabbing numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized steps");
  app.add_option("--out,-o", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string gen_kind;
  int gen_n = 9;
  gen->add_option("kind", gen_kind, "en, dn, pn, voronoi, arrangement, polytope, quadrants")
      ->required()
      ->check(CLI::IsMember({"en", "dn", "pn", "voronoi", "arrangement", "polytope", "quadrants"}));
  gen->add_option("--n", gen_n, "Size parameter");

  // shadow / shadow-number
  std::string in, dir;
  auto* shadow = app.add_subcommand("shadow", "Shadow of a polyhedron in one direction");
  shadow->add_option("--in", in, "VPOLY or HPOLY file")->required();
  shadow->add_option("--dir", dir, "a,b,c")->required();
  auto* shadow_num = app.add_subcommand("shadow-number", "Shadow number with a witness");
  shadow_num->add_option("--in", in, "VPOLY or HPOLY file")->required();

  // silhouette / silhouette-span
  std::string qtext, screen;
  int screens = 0;
  auto* sil = app.add_subcommand("silhouette", "Silhouette seen from a point");
  sil->add_option("--in", in, "VPOLY or HPOLY file")->required();
  sil->add_option("--q", qtext, "x,y,z")->required();
  sil->add_option("--screen", screen, "a,b,c,d: the screen a x + b y + c z = d");
  sil->add_option("--screens", screens, "Number of random separating screens to sample");
  auto* sil_span = app.add_subcommand("silhouette-span", "Silhouette span with a witness");
  sil_span->add_option("--in", in, "VPOLY or HPOLY file")->required();

  // spherical-image / project
  std::string rot = "1,0,0,0";
  auto* sph = app.add_subcommand("spherical-image", "Spherical image subdivision");
  sph->add_option("--in", in, "VPOLY or HPOLY file")->required();
  auto* proj = app.add_subcommand("project", "Gnomonic projection of the lower hemisphere");
  proj->add_option("--in", in, "Spherical JSON or polyhedron file")->required();
  proj->add_option("--rot", rot, "Quaternion q0,q1,q2,q3");
  int search = 0;
  proj->add_option("--search", search, "Search this many random rotations for ceil(n/2) regions");

  // stab / line-span / sweep-cert
  std::string line;
  auto* stab = app.add_subcommand("stab", "Regions crossed by a line");
  stab->add_option("--in", in, "Planar JSON")->required();
  stab->add_option("--line", line, "a,b,c for a x + b y = c")->required();
  auto* lspan = app.add_subcommand("line-span", "Line span with a witness");
  lspan->add_option("--in", in, "Planar JSON")->required();
  int k = 5;
  std::string cert;
  auto* sweep = app.add_subcommand("sweep-cert", "Sweep certificate, or check one with --check");
  sweep->add_option("--in", in, "Planar JSON")->required();
  sweep->add_option("--k", k, "Parameter k >= 5");
  sweep->add_option("--check", cert, "Certificate JSON to re-validate");

  // verify
  std::string what, report;
  int n_min = 6, n_max = 40;
  auto* verify = app.add_subcommand("verify", "Verify the P_n construction");
  verify->add_option("what", what, "pn")->required()->check(CLI::IsMember({"pn"}));
  verify->add_option("--n-min", n_min, "Smallest n");
  verify->add_option("--n-max", n_max, "Largest n");
  verify->add_option("--report", report, "Also write the JSON report here");

  // experiment
  std::string exp_name;
  ExperimentParams ep;
  bool runtime = false;
  auto* exp = app.add_subcommand("experiment", "Run an experiment");
  exp->add_option("name", exp_name, "Experiment")->required()->check(CLI::IsMember(experiment_names()));
  exp->add_option("--n-min", ep.n_min, "Smallest n");
  exp->add_option("--n-max", ep.n_max, "Largest n");
  exp->add_option("--sizes", ep.sizes, "Voronoi sizes")->delimiter(',');
  exp->add_option("--seeds", ep.seeds, "Seeds per size");
  exp->add_option("--k", ep.k, "Sweep parameter");
  exp->add_option("--instances", ep.instances, "Random polytopes");
  exp->add_option("--pn-max", ep.pn_max, "Largest P_n in polytope experiments");
  exp->add_option("--rotation-budget", ep.rotation_budget, "Rotation trials");
  exp->add_flag("--runtime", runtime, "Add wall-clock columns");

  // render
  std::string view = "gnomonic";
  std::vector<std::string> lines;
  bool witness = false;
  auto* render = app.add_subcommand("render", "SVG of a planar, spherical or shadow object");
  render->add_option("--in", in, "Planar JSON, spherical JSON or polyhedron file")->required();
  render->add_option("--view", view, "gnomonic or orthographic")
      ->check(CLI::IsMember({"gnomonic", "orthographic"}));
  render->add_option("--rot", rot, "Quaternion q0,q1,q2,q3");
  render->add_option("--line", lines, "Overlay a x + b y = c (repeatable)");
  render->add_flag("--witness", witness, "Overlay the line span witness");
  render->add_option("--dir", dir, "Shadow direction for a polyhedron input");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (gen_kind == "en") {
        emit(g, to_json(gen_ring_subdivision(gen_n).subdivision).dump(2) + "\n");
      } else if (gen_kind == "dn") {
        emit(g, to_json(lift_to_sphere(gen_ring_subdivision(gen_n))).dump(2) + "\n");
      } else if (gen_kind == "pn") {
        emit(g, write_hpoly(pn_halfspaces(lift_to_sphere(gen_ring_subdivision(gen_n)))));
      } else if (gen_kind == "voronoi") {
        emit(g, to_json(voronoi_subdivision(gen_n, g.seed)).dump(2) + "\n");
      } else if (gen_kind == "arrangement") {
        emit(g, to_json(line_arrangement(gen_n, g.seed)).dump(2) + "\n");
      } else if (gen_kind == "quadrants") {
        emit(g, to_json(quadrants()).dump(2) + "\n");
      } else {
        emit(g, write_vpoly(random_polytope(gen_n, g.seed).vertices()));
      }
    } else if (shadow->parsed()) {
      Polyhedron p = read_polyhedron(read_file(in));
      Ray u(parse_vec3(dir));
      Json j = {{"count", shadow_count(p, u)}, {"witness", to_json(PerturbedRay(u))},
                {"boundary_edges", boundary_edges(p, u)}};
      j["polygon"] = to_json(shadow_polygon(p, u));
      emit_json(g, j);
    } else if (shadow_num->parsed()) {
      emit_json(g, witness_json(shadow_number(read_polyhedron(read_file(in)))));
    } else if (sil->parsed()) {
      Polyhedron p = read_polyhedron(read_file(in));
      RVec3 q = parse_vec3(qtext);
      Json j = {{"count", silhouette_count(p, ViewPoint::finite(q))}};
      if (!screen.empty()) {
        std::vector<ExactRatio> h = parse_list(screen, 4, "--screen");
        j["point_silhouette"] = point_silhouette(p, q, {{h[0], h[1], h[2]}, h[3]});
      }
      if (screens > 0) {
        ScreenSample s = sample_screens(p, q, screens, g.seed);
        j["screens"] = s.screens;
        j["screen_min"] = s.min;
        j["screen_max"] = s.max;
        j["depends_on_screen"] = s.depends_on_screen();
      }
      emit_json(g, j);
    } else if (sil_span->parsed()) {
      Polyhedron p = read_polyhedron(read_file(in));
      SilhouetteSpan s = silhouette_span(p);
      Json j = {{"count", s.count},
                {"attained", s.attained() ? "attained" : "limit-only"},
                {"finite_best", s.finite_best},
                {"infinite_best", s.infinite_best},
                {"candidates", s.candidates},
                {"witness", s.witness.str()}};
      if (s.finite_witness) j["finite_witness"] = to_json(*s.finite_witness);
      emit_json(g, j);
    } else if (sph->parsed()) {
      emit(g, to_json(spherical_image(read_polyhedron(read_file(in)))).dump(2) + "\n");
    } else if (proj->parsed()) {
      SphericalSubdivision d = load_spherical(in);
      RationalRotation r = RationalRotation::parse(rot);
      if (search > 0) {
        RotationSearch rs = find_rotation_covering_half(d, search, g.seed);
        if (!rs.met) {
          throw Error(ErrorKind::kSearchFailure, "best rotation " + rs.rotation.str() + " reaches " +
                                                     std::to_string(rs.k) + " of " +
                                                     std::to_string(rs.target) + " regions");
        }
        r = rs.rotation;
      }
      Json j = to_json(project_subdivision(d, r));
      j["rotation"] = r.str();
      emit(g, j.dump(2) + "\n");
    } else if (stab->parsed()) {
      emit_json(g, {{"count", stab_count(load_planar(in), parse_line(line))}});
    } else if (lspan->parsed()) {
      LineSpanResult r = line_span(load_planar(in));
      emit_json(g, {{"count", r.count}, {"witness", to_json(r.witness)}});
    } else if (sweep->parsed()) {
      PlanarSubdivision s = load_planar(in);
      if (!cert.empty()) {
        CertificateCheck c = check_certificate(s, certificate_from_json(load_json(cert)));
        emit_json(g, {{"ok", c.ok()},
                      {"count_matches", c.count_matches},
                      {"meets_guarantee", c.meets_guarantee},
                      {"recurrence", c.recurrence},
                      {"detail", c.detail}});
        return c.ok() ? 0 : 1;
      }
      emit(g, to_json(sweep_certificate(s, k)).dump(2) + "\n");
    } else if (verify->parsed()) {
      Json rows = Json::array();
      bool all = true;
      std::string csv = "n,vertices,edges,faces,shadow_number,great_circle_span,line_span,ring_span,pass\n";
      for (int n = n_min; n <= n_max; ++n) {
        Theorem82Report r = verify_theorem_82(n);
        all = all && r.pass();
        rows.push_back({{"n", n},
                        {"size", to_json(r.size)},
                        {"shadow_number", r.shadow_number},
                        {"great_circle_span", r.great_circle_span},
                        {"line_span", r.line_span},
                        {"ring_span", r.ring_span},
                        {"pass", r.pass()},
                        {"checks", checks_json(r.checks)}});
        csv += std::to_string(n) + "," + std::to_string(r.size.v) + "," + std::to_string(r.size.e) + "," +
               std::to_string(r.size.f) + "," + std::to_string(r.shadow_number) + "," +
               std::to_string(r.great_circle_span) + "," + std::to_string(r.line_span) + "," +
               std::to_string(r.ring_span) + "," + (r.pass() ? "true" : "false") + "\n";
      }
      Json j = {{"verify", "pn"}, {"n_min", n_min}, {"n_max", n_max}, {"pass", all}, {"rows", rows}};
      if (!report.empty()) write_file(report, j.dump(2) + "\n");
      emit(g, g.format == "csv" ? csv : j.dump(2) + "\n");
      return all ? 0 : 1;
    } else if (exp->parsed()) {
      ep.seed = g.seed;
      ep.runtime = runtime;
      ExperimentReport r = run_experiment(exp_name, ep);
      emit(g, g.format == "csv" ? r.to_csv() : r.to_json().dump(2) + "\n");
      return r.pass ? 0 : 1;
    } else if (render->parsed()) {
      SvgOptions opt;
      opt.view = view == "orthographic" ? SvgOptions::View::kOrthographic : SvgOptions::View::kGnomonic;
      opt.rotation = RationalRotation::parse(rot);
      for (const std::string& l : lines) opt.lines.push_back(parse_line(l));
      std::string text = read_file(in);
      if (is_polyhedron_file(text)) {
        Polyhedron p = read_polyhedron(text);
        Ray u = dir.empty() ? Ray(shadow_number(p).direction.base) : Ray(parse_vec3(dir));
        emit(g, render_svg(shadow_polygon(p, u), opt));
      } else {
        Json j = Json::parse(text);
        if (j.contains("kind")) {
          emit(g, render_svg(spherical_from_json(j), opt));
        } else {
          PlanarSubdivision s = planar_from_json(j);
          if (witness) opt.lines.push_back(line_span(s).witness);
          emit(g, render_svg(s, opt));
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error[" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
