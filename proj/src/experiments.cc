#include "moser/experiments.h"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "moser/constructions.h"
#include "moser/generators.h"
#include "moser/gnomonic.h"
#include "moser/shadow.h"
#include "moser/silhouette.h"
#include "moser/spherical.h"
#include "moser/sweep.h"

namespace moser {

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  std::string name;
  std::function<Polyhedron()> build;
};

// Random polytopes with 8..30 vertices, then P_6 .. P_pn_max.
std::vector<Instance> polytope_instances(const ExperimentParams& p) {
  std::vector<Instance> out;
  for (int i = 0; i < p.instances; ++i) {
    int v = 8 + i % 23;
    uint64_t seed = p.seed * 1000003 + static_cast<uint64_t>(i);
    out.push_back({"random-" + std::to_string(i) + "-v" + std::to_string(v),
                   [v, seed] { return random_polytope(v, seed); }});
  }
  for (int n = 6; n <= p.pn_max; ++n) {
    out.push_back({"P_" + std::to_string(n),
                   [n] { return build_pn(lift_to_sphere(gen_ring_subdivision(n))); }});
  }
  return out;
}

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Runs row(i) for i < count, in parallel, and assembles rows in index
// order. Stage errors are rethrown with the instance name.
template <class F>
void fill(ExperimentReport& r, size_t count, const ExperimentParams& p,
          const std::function<std::string(size_t)>& name, F&& row) {
  std::vector<Json> rows(count);
  std::vector<double> secs(count);
  parallel_for(count, p.exec, [&](size_t i) {
    auto t0 = Clock::now();
    try {
      rows[i] = row(i);
    } catch (const Error& e) {
      throw Error(e.kind(), r.id + " " + name(i) + ": " + e.what());
    }
    secs[i] = std::chrono::duration<double>(Clock::now() - t0).count();
  });
  for (size_t i = 0; i < count; ++i) {
    if (p.runtime) rows[i]["runtime_s"] = secs[i];
    r.pass = r.pass && rows[i].at("pass").get<bool>();
    r.rows.push_back(std::move(rows[i]));
  }
  if (p.runtime) r.columns.push_back("runtime_s");
}

ExperimentReport pn_shadow(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "pn-shadow";
  r.params = {{"n_min", p.n_min}, {"n_max", p.n_max}};
  r.columns = {"n", "vertices", "edges", "faces", "shadow_number", "pass"};
  size_t count = p.n_max >= p.n_min ? p.n_max - p.n_min + 1 : 0;
  fill(r, count, p, [&](size_t i) { return "n=" + std::to_string(p.n_min + i); },
       [&](size_t i) {
         int n = p.n_min + static_cast<int>(i);
         Polyhedron pn = build_pn(lift_to_sphere(gen_ring_subdivision(n)));
         DirectionWitness w = shadow_number(pn, Exec::kSerial);
         SizeMeasures m = pn.size_measures();
         Json row = {{"n", n},       {"vertices", m.v},           {"edges", m.e},
                     {"faces", m.f}, {"shadow_number", w.count}, {"pass", w.count == 5}};
         row["witness"] = to_json(w.direction);
         return row;
       });
  return r;
}

ExperimentReport en_span(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "en-span";
  r.params = {{"n_min", p.n_min}, {"n_max", p.n_max}};
  r.columns = {"n", "regions", "line_span", "ring_span", "pass"};
  size_t count = p.n_max >= p.n_min ? p.n_max - p.n_min + 1 : 0;
  fill(r, count, p, [&](size_t i) { return "n=" + std::to_string(p.n_min + i); },
       [&](size_t i) {
         int n = p.n_min + static_cast<int>(i);
         RingSubdivision e = gen_ring_subdivision(n);
         LineSpanResult ls = line_span(e.subdivision, Exec::kSerial);
         Json row = {{"n", n},
                     {"regions", e.subdivision.regions.size()},
                     {"line_span", ls.count},
                     {"ring_span", e.ring_span},
                     {"pass", ls.count == 6 && e.ring_span <= 4}};
         row["witness"] = to_json(ls.witness);
         return row;
       });
  return r;
}

ExperimentReport sweep_bound(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "sweep-bound";
  r.params = {{"sizes", p.sizes}, {"seeds", p.seeds}, {"k", p.k}, {"seed", p.seed}};
  r.columns = {"n", "seed", "k", "count", "guarantee", "kind", "stages", "recurrence", "pieces_ok", "pass"};
  size_t per = static_cast<size_t>(std::max(p.seeds, 0));
  auto at = [&](size_t i) {
    return std::make_pair(p.sizes[i / per], p.seed + static_cast<uint64_t>(i % per));
  };
  fill(r, p.sizes.size() * per, p,
       [&](size_t i) {
         auto [n, s] = at(i);
         return "voronoi n=" + std::to_string(n) + " seed=" + std::to_string(s);
       },
       [&](size_t i) {
         auto [n, s] = at(i);
         PlanarSubdivision v = voronoi_subdivision(n, s);
         StabCertificate c = sweep_certificate(v, p.k, Exec::kSerial);
         CertificateCheck chk = check_certificate(v, c);
         Json row = {{"n", n},
                     {"seed", s},
                     {"k", p.k},
                     {"count", c.count},
                     {"guarantee", c.guarantee},
                     {"kind", certificate_kind_name(c.kind)},
                     {"stages", c.stages.size()},
                     {"recurrence", chk.recurrence},
                     {"pieces_ok", c.pieces_ok},
                     {"pass", chk.ok()}};
         row["witness"] = to_json(c);
         return row;
       });
  return r;
}

ExperimentReport lemma33(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "lemma33";
  r.params = {{"instances", p.instances}, {"pn_max", p.pn_max}, {"seed", p.seed}};
  r.columns = {"instance", "vertices", "shadow_number", "silhouette_span", "attained", "pass"};
  std::vector<Instance> inst = polytope_instances(p);
  fill(r, inst.size(), p, [&](size_t i) { return inst[i].name; },
       [&](size_t i) {
         Polyhedron poly = inst[i].build();
         DirectionWitness s = shadow_number(poly, Exec::kSerial);
         SilhouetteSpan ss = silhouette_span(poly, Exec::kSerial);
         Json row = {{"instance", inst[i].name},
                     {"vertices", poly.vertices().size()},
                     {"shadow_number", s.count},
                     {"silhouette_span", ss.count},
                     {"attained", ss.attained()},
                     {"pass", ss.count >= s.count}};
         row["witness"] = {{"viewpoint", ss.witness.str()}};
         if (ss.finite_witness) row["witness"]["point"] = to_json(*ss.finite_witness);
         return row;
       });
  return r;
}

ExperimentReport theorem55(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "theorem55";
  r.params = {{"instances", p.instances}, {"pn_max", p.pn_max}, {"seed", p.seed}};
  r.columns = {"instance", "vertices", "shadow_number", "great_circle_span", "pass"};
  std::vector<Instance> inst = polytope_instances(p);
  fill(r, inst.size(), p, [&](size_t i) { return inst[i].name; },
       [&](size_t i) {
         Polyhedron poly = inst[i].build();
         DirectionWitness s = shadow_number(poly, Exec::kSerial);
         CircleSpanResult c = great_circle_span(spherical_image(poly), Exec::kSerial);
         Json row = {{"instance", inst[i].name},
                     {"vertices", poly.vertices().size()},
                     {"shadow_number", s.count},
                     {"great_circle_span", c.count},
                     {"pass", s.count == c.count}};
         row["witness"] = {{"direction", to_json(s.direction)}, {"circle", to_json(c.witness)}};
         return row;
       });
  return r;
}

ExperimentReport theorem64(const ExperimentParams& p) {
  ExperimentReport r;
  r.id = "theorem64";
  r.params = {{"instances", p.instances},
              {"rotation_budget", p.rotation_budget},
              {"rotations", p.rotations},
              {"seed", p.seed}};
  r.columns = {"instance", "regions", "k", "target", "trials", "great_circle_span",
               "projected_span_max", "pass"};
  fill(r, static_cast<size_t>(p.instances), p, [&](size_t i) { return "random-" + std::to_string(i); },
       [&](size_t i) {
         int v = 8 + static_cast<int>(i) % 23;
         uint64_t seed = p.seed * 1000003 + i;
         SphericalSubdivision d = spherical_image(random_polytope(v, seed));
         RotationSearch rs = find_rotation_covering_half(d, p.rotation_budget, seed);
         int gcs = great_circle_span(d, Exec::kSerial).count;
         std::vector<RationalRotation> rots = {rs.rotation};
         std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
         std::uniform_int_distribution<long> q(-50, 50);
         while (static_cast<int>(rots.size()) < p.rotations + 1) {
           long a = q(rng), b = q(rng), c = q(rng), e = q(rng);
           if (a * a + b * b + c * c + e * e == 0) continue;
           rots.emplace_back(a, b, c, e);
         }
         int proj_max = 0;
         bool ok = true;
         Json per = Json::array();
         for (const RationalRotation& rot : rots) {
           PlanarSubdivision ps = project_subdivision(d, rot);
           int l = ps.regions.empty() ? 0 : max_regions_crossed(ps.regions, Exec::kSerial).count;
           proj_max = std::max(proj_max, l);
           ok = ok && gcs >= l;
           per.push_back({{"rotation", rot.str()}, {"regions", ps.regions.size()}, {"line_span", l}});
         }
         Json row = {{"instance", "random-" + std::to_string(i)},
                     {"regions", d.regions.size()},
                     {"k", rs.k},
                     {"target", rs.target},
                     {"trials", rs.trials},
                     {"great_circle_span", gcs},
                     {"projected_span_max", proj_max},
                     {"pass", rs.met && ok}};
         row["witness"] = {{"rotation", rs.rotation.str()}, {"rotations", per}};
         return row;
       });
  return r;
}

}  // namespace

Json ExperimentReport::to_json() const {
  Json j;
  j["experiment"] = id;
  j["params"] = params;
  j["columns"] = columns;
  j["rows"] = rows;
  j["pass"] = pass;
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::string s;
  for (size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
  s += "\n";
  for (const Json& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) {
      s += (i ? "," : "") + csv_field(row.contains(columns[i]) ? row[columns[i]] : Json(""));
    }
    s += "\n";
  }
  return s;
}

std::vector<std::string> experiment_names() {
  return {"pn-shadow", "en-span", "sweep-bound", "lemma33", "theorem55", "theorem64"};
}

ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params) {
  static const std::map<std::string, ExperimentReport (*)(const ExperimentParams&)> table = {
      {"pn-shadow", pn_shadow}, {"en-span", en_span},     {"sweep-bound", sweep_bound},
      {"lemma33", lemma33},     {"theorem55", theorem55}, {"theorem64", theorem64}};
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::kInvalidArgument, "unknown experiment " + name);
  return it->second(params);
}

}  // namespace moser
