#include "moser/constructions.h"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "moser/gnomonic.h"
#include "moser/shadow.h"

namespace moser {

namespace {

// (k^2 - 1) / (2k); then r^2 + 1 = ((k^2 + 1) / (2k))^2.
ExactRatio pythagorean_radius(const ExactRatio& k) {
  return (k * k - ExactRatio(1)) / (ExactRatio(2) * k);
}

BigInt exact_sqrt(const BigInt& v, bool* ok) {
  *ok = mpz_perfect_square_p(v.get_mpz_t()) != 0;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  return s;
}

// Common point of the planes <w_i, x> = c_i as (num, den), or nullopt.
std::optional<std::pair<IVec3, BigInt>> common_point(const std::vector<IVec3>& w,
                                                     const std::vector<BigInt>& c) {
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      for (size_t k = j + 1; k < w.size(); ++k) {
        BigInt d = det3(w[i], w[j], w[k]);
        if (sgn(d) == 0) continue;
        // Cramer's rule on the column form.
        IVec3 col0(w[i][0], w[j][0], w[k][0]), col1(w[i][1], w[j][1], w[k][1]),
            col2(w[i][2], w[j][2], w[k][2]), rhs(c[i], c[j], c[k]);
        IVec3 num(det3(rhs, col1, col2), det3(col0, rhs, col2), det3(col0, col1, rhs));
        for (size_t m = 0; m < w.size(); ++m) {
          if (dot(w[m], num) != c[m] * d) return std::nullopt;
        }
        return std::make_pair(num, d);
      }
  return std::nullopt;
}

std::string point_str(const std::pair<IVec3, BigInt>& p) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ", ";
    s += ExactRatio(p.first[i], p.second).str();
  }
  return s + ")";
}

}  // namespace

RVec2 circle_point(double theta, const ExactRatio& r) {
  bool flip = std::cos(theta) < 0;
  if (flip) theta -= std::numbers::pi;
  const long kDen = 1000000;
  mpq_class t(std::lround(std::tan(theta / 2) * kDen), kDen);
  t.canonicalize();
  mpq_class one = 1;
  mpq_class x = (one - t * t) / (one + t * t), y = 2 * t / (one + t * t);
  RVec2 p{ExactRatio(x) * r, ExactRatio(y) * r};
  return flip ? RVec2{-p.x, -p.y} : p;
}

RingSubdivision gen_ring_subdivision(int n, int max_shrink) {
  if (n < 6) throw Error(ErrorKind::kParameter, "ring subdivision needs n >= 6");
  const int m = n - 1;
  RingParams params;
  params.n = n;
  params.k_inner = ExactRatio(3);
  params.r = pythagorean_radius(params.k_inner);
  for (int j = 0; j < m; ++j) {
    params.inner.push_back(circle_point(2 * std::numbers::pi * j / m, params.r));
  }
  ExactRatio gap(1);
  for (int step = 0; step <= max_shrink; ++step, gap = gap / ExactRatio(2)) {
    params.k_outer = params.k_inner + gap;
    params.R = pythagorean_radius(params.k_outer);
    params.shrink_steps = step;
    ExactRatio scale = params.R / params.r;
    params.outer.clear();
    for (const RVec2& p : params.inner) params.outer.push_back(p * scale);

    RingSubdivision e;
    std::vector<PlanarRegion>& reg = e.subdivision.regions;
    for (int j = 0; j < m; ++j) {
      int k = (j + 1) % m;
      PlanarRegion q = PlanarRegion::from_points(
          {params.inner[j], params.outer[j], params.outer[k], params.inner[k]});
      q.label = "ring" + std::to_string(j);
      reg.push_back(std::move(q));
    }
    PlanarRegion in = PlanarRegion::from_points(params.inner);
    in.label = "interior";
    PlanarRegion ex = PlanarRegion::from_points(params.outer, {}, true);
    ex.label = "exterior";
    reg.push_back(std::move(in));
    reg.push_back(std::move(ex));
    if (!e.subdivision.check_convex()) continue;
    std::vector<PlanarRegion> ring(reg.begin(), reg.begin() + m);
    e.ring_span = max_regions_crossed(ring).count;
    if (e.ring_span <= 4) {
      e.params = std::move(params);
      return e;
    }
  }
  throw Error(ErrorKind::kConstruction,
              "ring gap shrink budget exhausted for n = " + std::to_string(n));
}

SphericalSubdivision lift_to_sphere(const RingSubdivision& e) {
  SphericalSubdivision d;
  d.kind = SphericalSubdivision::Kind::kPartial;
  for (const PlanarRegion& r : e.subdivision.regions) {
    std::vector<Ray> cyc;
    if (r.exterior) {
      for (const RVec2& p : r.finite_cycle()) cyc.push_back(gnomonic_inverse(p));
      d.support = SphericalPolygon::from_cycle(std::move(cyc), "support");
      continue;
    }
    for (const RVec2& p : r.finite_cycle()) cyc.push_back(gnomonic_inverse(p));
    d.regions.push_back(SphericalPolygon::from_cycle(std::move(cyc), r.label));
  }
  return d;
}

std::vector<HalfSpace> pn_halfspaces(const SphericalSubdivision& d) {
  std::vector<HalfSpace> hs;
  for (const Ray& w : d.vertices()) {
    bool ok = false;
    BigInt len = exact_sqrt(dot(w.v(), w.v()), &ok);
    if (!ok) {
      throw Error(ErrorKind::kConstruction, "vertex ray " + w.str() + " has irrational length");
    }
    hs.push_back({w.v().to_rvec(), ExactRatio(len)});
  }
  return hs;
}

std::vector<NamedCheck> concurrency_claims(const SphericalSubdivision& d) {
  std::vector<NamedCheck> out;
  auto planes = [](const SphericalPolygon& p, std::vector<IVec3>* w, std::vector<BigInt>* c) {
    for (const Ray& r : p.cycle()) {
      bool ok = false;
      BigInt len = exact_sqrt(dot(r.v(), r.v()), &ok);
      if (!ok) return false;
      w->push_back(r.v());
      c->push_back(len);
    }
    return true;
  };
  NamedCheck claim1{"claim1-interior-concurrent", false, ""};
  NamedCheck claim2{"claim2-ring-concurrent", true, ""};
  int rings = 0;
  for (const SphericalPolygon& p : d.regions) {
    std::vector<IVec3> w;
    std::vector<BigInt> c;
    bool rational = planes(p, &w, &c);
    auto pt = rational ? common_point(w, c) : std::nullopt;
    if (p.label() == "interior") {
      claim1.pass = pt.has_value();
      claim1.detail = pt ? "apex " + point_str(*pt) : "no common point";
    } else {
      ++rings;
      if (!pt) {
        claim2.pass = false;
        claim2.detail = "region " + p.label() + " has no common point";
      }
    }
  }
  if (claim2.pass) claim2.detail = std::to_string(rings) + " ring regions";
  out.push_back(claim1);
  out.push_back(claim2);
  return out;
}

Polyhedron build_pn(const SphericalSubdivision& d) {
  for (const NamedCheck& c : concurrency_claims(d)) {
    if (!c.pass) throw Error(ErrorKind::kConstruction, c.name + ": " + c.detail);
  }
  return Polyhedron::from_hrep(pn_halfspaces(d));
}

bool Theorem82Report::pass() const {
  for (const NamedCheck& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

Theorem82Report verify_theorem_82(int n, Exec exec) {
  if (n < 6) throw Error(ErrorKind::kParameter, "theorem check needs n >= 6");
  Theorem82Report rep;
  rep.n = n;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  RingSubdivision e = gen_ring_subdivision(n);
  rep.ring_span = e.ring_span;
  add("ring-span<=4", e.ring_span <= 4, std::to_string(e.ring_span));
  LineSpanResult ls = line_span(e.subdivision, exec);
  rep.line_span = ls.count;
  add("line-span=6", ls.count == 6, std::to_string(ls.count) + " via " + ls.witness.str());

  SphericalSubdivision d = lift_to_sphere(e);
  bool below = true;
  for (const Ray& v : d.vertices()) below &= sgn(v[2]) < 0;
  add("lift-in-lower-hemisphere", below, std::to_string(d.vertices().size()) + " vertices");
  for (NamedCheck& c : concurrency_claims(d)) rep.checks.push_back(std::move(c));

  Polyhedron p = Polyhedron::from_hrep(pn_halfspaces(d));
  rep.size = p.size_measures();
  const SizeMeasures& s = rep.size;
  add("vertices=n", s.v == n, std::to_string(s.v));
  add("faces=n", s.f == n, std::to_string(s.f));
  add("edges=2n-1", s.e == 2 * n - 1, std::to_string(s.e));
  // Counts forced by incidence reversal with D_n.
  add("faces=2(n-1)", s.f == 2 * (n - 1), std::to_string(s.f));
  add("edges=3(n-1)", s.e == 3 * (n - 1), std::to_string(s.e));
  add("unbounded", !s.bounded, s.bounded ? "bounded" : "unbounded");
  add("euler", p.check_euler(), std::to_string(s.v - s.e + s.f));

  // Spherical image of P_n against D_n: same regions as vertex sets.
  SphericalSubdivision img = spherical_image(p);
  auto key = [](const SphericalSubdivision& x) {
    std::multiset<std::set<Ray>> k;
    for (const SphericalPolygon& r : x.regions) k.insert({r.cycle().begin(), r.cycle().end()});
    return k;
  };
  add("spherical-image=D_n", key(img) == key(d),
      std::to_string(img.regions.size()) + " regions");

  CircleSpanResult gc = great_circle_span(d, exec);
  rep.great_circle_span = gc.count;
  add("great-circle-span=5", gc.count == 5, std::to_string(gc.count));
  DirectionWitness sw = shadow_number(p, exec);
  rep.shadow_number = sw.count;
  add("shadow-number=5", sw.count == 5, std::to_string(sw.count) + " at " + sw.direction.str());
  return rep;
}

}  // namespace moser
