// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. All checks are exact; the only tolerances are
// the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "moser/constructions.h"
#include "moser/experiments.h"
#include "moser/generators.h"
#include "moser/gnomonic.h"
#include "moser/shadow.h"
#include "moser/silhouette.h"
#include "moser/spherical.h"
#include "test_util.h"

using namespace moser;

namespace {

constexpr double kPnSeconds = 120;         // criterion 1
constexpr double kSpanEqualSeconds = 300;  // criterion 2
constexpr double kSweepSeconds = 600;      // criterion 5, per instance at n = 10^4
constexpr int kRandomPolytopes = 50;
constexpr int kHullPolytopes = 100;
constexpr int kHullDirections = 20;
constexpr int kCircles = 100;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// Every polyhedron built here goes through this, for the Euler check.
std::vector<SizeMeasures> built;
int euler_bad = 0, size_bad = 0;
std::string first_bad;

Polyhedron keep(Polyhedron p, const std::string& name) {
  SizeMeasures m = p.size_measures();
  built.push_back(m);
  if (!p.check_euler()) {
    ++euler_bad;
    if (first_bad.empty()) first_bad = name + " (euler)";
  }
  if (!p.check_size_bounds()) {
    ++size_bad;
    if (first_bad.empty()) first_bad = name + " (size)";
  }
  return p;
}

Polyhedron pn(int n) {
  return keep(build_pn(lift_to_sphere(gen_ring_subdivision(n))), "P_" + std::to_string(n));
}

// Same instances as the polytope experiments.
Polyhedron random_instance(int i, uint64_t seed) {
  return keep(random_polytope(8 + i % 23, seed * 1000003 + static_cast<uint64_t>(i)),
              "random-" + std::to_string(i));
}

// Strict hull vertex count, monotone chain.
int hull_vertex_count(std::vector<RVec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const RVec2& a, const RVec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return static_cast<int>(pts.size());
  std::vector<RVec2> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  return static_cast<int>(k - 1);
}

// Silhouette seen from q by central projection onto a plane orthogonal to
// the axis from q to the centroid.
int oracle_silhouette(const Polyhedron& p, const RVec3& q) {
  RVec3 c{0, 0, 0};
  for (const RVec3& v : p.vertices()) c = c + v;
  c = c * ExactRatio(BigInt(1), BigInt(static_cast<long>(p.vertices().size())));
  RVec3 axis = c - q;
  auto [b1, b2] = orthogonal_basis(Ray(axis));
  std::vector<RVec2> pts;
  for (const RVec3& v : p.vertices()) {
    RVec3 w = v - q;
    RVec3 x = w * (dot(axis, axis) / dot(axis, w));
    pts.push_back({dot(x, b1.to_rvec()), dot(x, b2.to_rvec())});
  }
  return hull_vertex_count(pts);
}

// Best oracle value over a shifted grid of viewpoints, one per cell it hits.
int oracle_span(const Polyhedron& p, long lo, long hi) {
  int best = 0;
  for (long x = lo; x <= hi; ++x)
    for (long y = lo; y <= hi; ++y)
      for (long z = lo; z <= hi; ++z) {
        RVec3 q{ExactRatio(BigInt(7 * x + 1), BigInt(7)), ExactRatio(BigInt(11 * y + 1), BigInt(11)),
                ExactRatio(BigInt(13 * z + 1), BigInt(13))};
        try {
          visibility(p, ViewPoint::finite(q));
        } catch (const Error&) {
          continue;  // inside P or on a face plane
        }
        best = std::max(best, oracle_silhouette(p, q));
      }
  return best;
}

ExperimentParams pn_params() {
  ExperimentParams p;
  p.n_min = 6;
  p.n_max = 40;
  return p;
}

ExperimentParams polytope_params() {
  ExperimentParams p;
  p.instances = kRandomPolytopes;
  p.pn_max = 20;
  return p;
}

ExperimentParams rotation_params() {
  ExperimentParams p;
  p.instances = 20;
  p.rotation_budget = 200;
  return p;
}

struct Run {
  std::string name;
  ExperimentParams params;
  ExperimentReport report;
};
std::vector<Run> runs;

const ExperimentReport& run(const std::string& name, const ExperimentParams& p) {
  runs.push_back({name, p, run_experiment(name, p)});
  return runs.back().report;
}

void criterion1() {
  auto t0 = Clock::now();
  const ExperimentReport& r = run("pn-shadow", pn_params());
  double secs = since(t0);
  int bad_v = 0, bad_e = 0, bad_f = 0, bad_s = 0;
  std::string example;
  for (const Json& row : r.rows) {
    int n = row["n"].get<int>();
    int v = row["vertices"].get<int>(), e = row["edges"].get<int>(), f = row["faces"].get<int>();
    bad_v += v != n;
    bad_e += e != 2 * n - 1;
    bad_f += f != n;
    bad_s += row["shadow_number"].get<int>() != 5;
    if (n == 6) example = "P_6 has v=" + std::to_string(v) + " e=" + std::to_string(e) + " f=" + std::to_string(f);
  }
  for (int n = 6; n <= 40; ++n) pn(n);
  bool pass = bad_v == 0 && bad_e == 0 && bad_f == 0 && bad_s == 0 && secs < kPnSeconds;
  report(1, "P_n sizes and shadow number, n=6..40", pass,
         "vertices wrong " + std::to_string(bad_v) + ", edges != 2n-1 " + std::to_string(bad_e) +
             ", faces != n " + std::to_string(bad_f) + ", shadow != 5 " + std::to_string(bad_s) + "; " +
             example + "; " + fmt(secs));
}

void criterion2() {
  auto t0 = Clock::now();
  const ExperimentReport& r = run("theorem55", polytope_params());
  double secs = since(t0);
  int bad = 0;
  for (const Json& row : r.rows) bad += row["shadow_number"] != row["great_circle_span"];
  for (int i = 0; i < kRandomPolytopes; ++i) random_instance(i, 1);
  report(2, "shadow number equals great circle span", bad == 0 && r.pass && secs < kSpanEqualSeconds,
         std::to_string(r.rows.size()) + " polytopes, " + std::to_string(bad) + " mismatches; " + fmt(secs));
}

void criterion3() {
  std::mt19937_64 g(3);
  int checked = 0, bad = 0;
  for (int i = 0; i < kHullPolytopes; ++i) {
    Polyhedron p = keep(testing::random_polytope(g, 8 + i % 23), "hull-" + std::to_string(i));
    for (int d = 0; d < kHullDirections;) {
      Ray u = testing::random_ray(g);
      bool generic = true;
      for (const Face& f : p.faces()) generic = generic && sign_of_dot(f.row, u.v()) != 0;
      for (const Edge& e : p.edges()) generic = generic && !cross(e.direction.v(), u.v()).is_zero();
      if (!generic) continue;
      ++d;
      auto [b1, b2] = orthogonal_basis(u);
      std::vector<RVec2> pts;
      for (const RVec3& v : p.vertices()) pts.push_back({dot(v, b1.to_rvec()), dot(v, b2.to_rvec())});
      ++checked;
      bad += shadow_count(p, u) != hull_vertex_count(pts);
    }
  }
  report(3, "shadow count equals projected hull vertex count", bad == 0,
         std::to_string(checked) + " polytope-direction pairs, " + std::to_string(bad) + " mismatches");
}

void criterion4() {
  const ExperimentReport& r = run("en-span", pn_params());
  int bad_line = 0, bad_ring = 0;
  for (const Json& row : r.rows) {
    bad_line += row["line_span"].get<int>() != 6;
    bad_ring += row["ring_span"].get<int>() > 4;
  }
  report(4, "line span of E_n is 6 and ring span at most 4, n=6..40",
         r.pass && bad_line == 0 && bad_ring == 0 && r.rows.size() == 35,
         "line span != 6: " + std::to_string(bad_line) + ", ring span > 4: " + std::to_string(bad_ring));
}

void criterion5() {
  ExperimentParams p;
  p.sizes = {100, 1000, 10000};
  p.seeds = 3;
  p.k = 5;
  auto t0 = Clock::now();
  const ExperimentReport& r = run("sweep-bound", p);
  double secs = since(t0);
  int bad = 0;
  size_t stages = 0;
  std::string counts;
  for (const Json& row : r.rows) {
    // Re-measure independently of the certificate checker.
    PlanarSubdivision v = voronoi_subdivision(row["n"].get<int>(), row["seed"].get<uint64_t>());
    StabCertificate c = certificate_from_json(row["witness"]);
    int measured = stab_count(v, c.line);
    bool ok = measured >= std::min(p.k, c.guarantee) && c.guarantee == sweep_guarantee(c.n, p.k) &&
              c.n == static_cast<int>(v.regions.size());
    // The last stage stops the sweep and has no kernel to recurse into.
    for (size_t i = 0; i + 1 < c.stages.size(); ++i) {
      const SweepStage &a = c.stages[i], &b = c.stages[i + 1];
      ok = ok && b.regions == a.kernel_regions && (3 * p.k - 4) * b.regions >= a.regions - (p.k - 1);
    }
    stages = std::max(stages, c.stages.size());
    bad += !ok || !row["pass"].get<bool>();
    counts += (counts.empty() ? "" : " ") + std::to_string(measured) + "/" + std::to_string(c.guarantee);
  }
  // The whole run bounds the per-instance time at n = 10^4.
  report(5, "sweep certificate meets the guarantee and recurrence", bad == 0 && r.rows.size() == 9 && secs < kSweepSeconds,
         "stab/guarantee " + counts + ", at most " + std::to_string(stages) + " stages; " + fmt(secs));
}

void criterion6() {
  std::mt19937_64 g(6);
  std::uniform_int_distribution<long> c(-100, 100);
  int circles = 0, bad = 0;
  while (circles < kCircles) {
    IVec3 n(c(g), c(g), c(g));
    if (sgn(n[0]) == 0 && sgn(n[1]) == 0) continue;  // the horizon misses the open hemisphere
    std::vector<RVec2> img;
    while (img.size() < 3) {
      IVec3 x = cross(n, IVec3(c(g), c(g), c(g)));
      if (sgn(x[2]) == 0) continue;
      if (sgn(x[2]) > 0) x = -x;
      RVec2 p = gnomonic(Ray(x));
      if (std::find(img.begin(), img.end(), p) == img.end()) img.push_back(p);
    }
    ++circles;
    bad += orient2d(img[0], img[1], img[2]) != 0;
  }
  int polys = 0, nonconvex = 0;
  for (int i = 0; i < 20; ++i) {
    SphericalSubdivision d = spherical_image(random_instance(i, 1));
    for (const RationalRotation& rot : {RationalRotation(1, 0, 0, 0), RationalRotation(3, 1, -2, 5),
                                        RationalRotation(7, -4, 1, 2)}) {
      for (const PlanarRegion& r : project_subdivision(d, rot).regions) {
        ++polys;
        nonconvex += !r.is_convex();
      }
    }
  }
  report(6, "gnomonic projection keeps lines and convexity", bad == 0 && nonconvex == 0 && polys > 0,
         std::to_string(circles) + " circles, " + std::to_string(bad) + " not collinear; " +
             std::to_string(polys) + " projected regions, " + std::to_string(nonconvex) + " not convex");
}

void criterion7() {
  const ExperimentReport& r = run("lemma33", polytope_params());
  int bad = 0;
  for (const Json& row : r.rows) bad += row["silhouette_span"].get<int>() < row["shadow_number"].get<int>();
  Polyhedron simplex = keep(testing::regular_simplex(), "simplex");
  Polyhedron cube = keep(testing::cube(), "cube");
  int ss = silhouette_span(simplex).count, sc = silhouette_span(cube).count;
  int os = oracle_span(simplex, -2, 3), oc = oracle_span(cube, -2, 3);
  report(7, "silhouette span at least shadow number; simplex and cube values",
         r.pass && bad == 0 && ss == 4 && sc == 6 && os == ss && oc == sc,
         std::to_string(r.rows.size()) + " polytopes, " + std::to_string(bad) +
             " below; simplex " + std::to_string(ss) + " (oracle " + std::to_string(os) + "), cube " +
             std::to_string(sc) + " (oracle " + std::to_string(oc) + ")");
}

void criterion8() {
  keep(testing::orthant(), "orthant");
  keep(testing::simplex(), "unit simplex");
  keep(Polyhedron::from_hrep({{{0, 0, -1}, 0}, {{1, 1, -1}, 1}, {{-1, 1, -1}, 1}, {{0, -1, -1}, 1}}),
       "unbounded pyramid");
  int unbounded = 0;
  for (const SizeMeasures& m : built) unbounded += !m.bounded;
  report(8, "Euler and size bounds on every polyhedron built", euler_bad == 0 && size_bad == 0,
         std::to_string(built.size()) + " polyhedra (" + std::to_string(unbounded) + " unbounded), euler " +
             std::to_string(euler_bad) + " bad, size " + std::to_string(size_bad) + " bad" +
             (first_bad.empty() ? "" : ", first " + first_bad));
}

void criterion9() {
  const ExperimentReport& r = run("theorem64", rotation_params());
  int unmet = 0, below = 0;
  for (const Json& row : r.rows) {
    unmet += row["k"].get<int>() < row["target"].get<int>() || row["trials"].get<int>() > 200;
    for (const Json& rot : row["witness"]["rotations"]) below += row["great_circle_span"] < rot["line_span"];
  }
  report(9, "half-covering rotation found; circle span bounds projected span",
         r.pass && unmet == 0 && below == 0 && r.rows.size() == 20,
         std::to_string(r.rows.size()) + " subdivisions, " + std::to_string(unmet) + " searches unmet, " +
             std::to_string(below) + " rotations with projected span above circle span");
}

void criterion10() {
  std::vector<std::string> names = experiment_names();
  if (runs.size() != names.size()) {
    report(10, "experiments are deterministic", false, "expected one earlier run per experiment");
    return;
  }
  int bad = 0;
  for (const Run& first : runs) {
    ExperimentParams p = first.params;
    p.exec = Exec::kSerial;  // also compares the serial path with the parallel one
    ExperimentReport again = run_experiment(first.name, p);
    bad += again.to_json().dump() != first.report.to_json().dump() || again.to_csv() != first.report.to_csv();
  }
  report(10, "experiments are deterministic", bad == 0,
         std::to_string(runs.size()) + " experiments re-run, " + std::to_string(bad) + " differ");
}

}  // namespace

int main() {
  runs.reserve(8);
  std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9, criterion10};
  for (auto& c : all) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL (exception) %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, all.size());
  return failures;
}
