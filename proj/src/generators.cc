#include "moser/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "moser/constructions.h"

namespace moser {

namespace {

// h with <h, X> >= 0 exactly on the half-plane closer to a than to b.
IVec3 bisector(const IVec3& a, const IVec3& b) {
  // a, b homogeneous with W = 1 after scaling to a common denominator.
  BigInt dx = b[0] - a[0], dy = b[1] - a[1];
  BigInt rhs = b[0] * b[0] + b[1] * b[1] - a[0] * a[0] - a[1] * a[1];
  return IVec3(BigInt(-2 * dx), BigInt(-2 * dy), rhs);
}

}  // namespace

PlanarSubdivision voronoi_of(const std::vector<RVec2>& sites) {
  const size_t n = sites.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "voronoi needs at least one site");
  // Common denominator so that bisectors are integral.
  BigInt den = 1;
  for (const RVec2& p : sites) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.x.den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.y.den().get_mpz_t());
  }
  std::vector<IVec3> pts;
  std::vector<std::pair<double, double>> fp;
  for (const RVec2& p : sites) {
    mpq_class x = p.x.value() * den, y = p.y.value() * den;
    pts.emplace_back(BigInt(x.get_num()), BigInt(y.get_num()), BigInt(1));
    fp.emplace_back(x.get_d(), y.get_d());
  }
  {
    std::set<IVec3> uniq(pts.begin(), pts.end());
    if (uniq.size() != n) throw Error(ErrorKind::kInvalidArgument, "voronoi sites must be distinct");
  }
  double minx = fp[0].first, maxx = minx, miny = fp[0].second, maxy = miny;
  for (auto [x, y] : fp) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  double span = std::max({maxx - minx, maxy - miny, 1.0});
  int g = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n) / 2)));
  double cell = span / g * (1 + 1e-9);
  auto bucket = [&](double v, double lo) {
    return std::clamp(static_cast<int>((v - lo) / cell), 0, g - 1);
  };
  std::vector<std::vector<size_t>> grid(static_cast<size_t>(g) * g);
  for (size_t i = 0; i < n; ++i) {
    grid[bucket(fp[i].first, minx) * g + bucket(fp[i].second, miny)].push_back(i);
  }

  std::vector<PlanarRegion> cells(n);
  parallel_for(n, Exec::kParallel, [&](size_t i) {
    std::vector<IVec3> cyc = whole_plane_cycle();
    int bx = bucket(fp[i].first, minx), by = bucket(fp[i].second, miny);
    for (int r = 0; r < g; ++r) {
      for (int cx = bx - r; cx <= bx + r; ++cx)
        for (int cy = by - r; cy <= by + r; ++cy) {
          if (std::max(std::abs(cx - bx), std::abs(cy - by)) != r) continue;
          if (cx < 0 || cy < 0 || cx >= g || cy >= g) continue;
          for (size_t j : grid[cx * g + cy]) {
            if (j != i) cyc = clip_cycle(cyc, bisector(pts[i], pts[j]));
          }
        }
      // Sites beyond ring r are at least r * cell away; they cannot cut a
      // bounded cell of radius R once r * cell > 2R (with margin).
      bool bounded = true;
      double rad = 0;
      for (const IVec3& v : cyc) {
        if (sgn(v[2]) == 0) { bounded = false; break; }
        double x = mpq_class(v[0], v[2]).get_d(), y = mpq_class(v[1], v[2]).get_d();
        rad = std::max(rad, std::hypot(x - fp[i].first, y - fp[i].second));
      }
      if (bounded && r * cell > 2.02 * rad + 1e-6 * span) break;
    }
    PlanarRegion reg = PlanarRegion::from_homogeneous(cyc);
    reg.label = "c" + std::to_string(i);
    cells[i] = std::move(reg);
  });
  return PlanarSubdivision{std::move(cells)};
}

PlanarSubdivision voronoi_subdivision(int n, uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kParameter, "voronoi needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, (1L << 20) - 1);
  std::set<std::pair<long, long>> seen;
  std::vector<RVec2> sites;
  while (static_cast<int>(sites.size()) < n) {
    long x = dist(rng), y = dist(rng);
    if (seen.insert({x, y}).second) sites.push_back({ExactRatio(x), ExactRatio(y)});
  }
  return voronoi_of(sites);
}

PlanarSubdivision arrangement_of(const std::vector<IVec3>& lines) {
  std::vector<std::vector<IVec3>> cells = {whole_plane_cycle()};
  for (const IVec3& h : lines) {
    std::vector<std::vector<IVec3>> next;
    for (const auto& c : cells) {
      for (const IVec3& s : {h, IVec3(-h)}) {
        std::vector<IVec3> part = clip_cycle(c, s);
        if (!part.empty()) next.push_back(std::move(part));
      }
    }
    cells = std::move(next);
  }
  PlanarSubdivision s;
  for (size_t i = 0; i < cells.size(); ++i) {
    PlanarRegion r = PlanarRegion::from_homogeneous(cells[i]);
    r.label = "a" + std::to_string(i);
    s.regions.push_back(std::move(r));
  }
  return s;
}

PlanarSubdivision line_arrangement(int m, uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::kParameter, "line arrangement needs m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<IVec3> lines;
  int retries = 0;
  while (static_cast<int>(lines.size()) < m) {
    if (++retries > 100 * m + 1000) {
      throw Error(ErrorKind::kSearchFailure, "could not draw lines in general position");
    }
    IVec3 h(coef(rng), coef(rng), coef(rng));
    if (sgn(h[0]) == 0 && sgn(h[1]) == 0) continue;
    bool ok = true;
    for (size_t i = 0; i < lines.size() && ok; ++i) {
      // Not parallel, and no three lines through one point.
      if (h[0] * lines[i][1] == h[1] * lines[i][0]) ok = false;
      for (size_t j = i + 1; j < lines.size() && ok; ++j) {
        if (sgn(det3(h, lines[i], lines[j])) == 0) ok = false;
      }
    }
    if (ok) lines.push_back(h);
  }
  return arrangement_of(lines);
}

PlanarSubdivision quadrants() {
  const RVec2 o{0, 0};
  PlanarSubdivision s;
  std::vector<std::pair<RVec2, RVec2>> rays = {
      {{0, 1}, {1, 0}}, {{-1, 0}, {0, 1}}, {{0, -1}, {-1, 0}}, {{1, 0}, {0, -1}}};
  for (size_t i = 0; i < rays.size(); ++i) {
    PlanarRegion r = PlanarRegion::from_points({o}, {rays[i].first, rays[i].second});
    r.label = "q" + std::to_string(i + 1);
    s.regions.push_back(std::move(r));
  }
  return s;
}

PlanarSubdivision trivial_subdivision() {
  PlanarRegion r = PlanarRegion::from_homogeneous(whole_plane_cycle());
  r.label = "plane";
  return PlanarSubdivision{{r}};
}

PlanarSubdivision generate_subdivision(const std::string& kind, int param, uint64_t seed) {
  if (kind == "voronoi") return voronoi_subdivision(param, seed);
  if (kind == "line-arrangement") return line_arrangement(param, seed);
  if (kind == "ring") return gen_ring_subdivision(param).subdivision;
  throw Error(ErrorKind::kInvalidArgument, "unknown subdivision kind: " + kind);
}

Polyhedron random_polytope(int vertices, uint64_t seed) {
  if (vertices < 4) throw Error(ErrorKind::kParameter, "a polytope needs at least 4 vertices");
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (;;) {
    std::vector<RVec3> pts;
    while (static_cast<int>(pts.size()) < vertices) {
      long x = d(g), y = d(g), z = d(g);
      long r2 = x * x + y * y + z * z;
      if (r2 < 640000 || r2 > 1000000) continue;
      pts.push_back({x, y, z});
    }
    Polyhedron p = Polyhedron::from_vrep(pts);
    if (static_cast<int>(p.vertices().size()) == vertices) return p;
  }
}

}  // namespace moser
