#include "moser/spherical.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "moser/shadow.h"

namespace moser {

namespace {

bool on_one_circle(const std::vector<Ray>& c) {
  for (size_t i = 0; i < c.size(); ++i) {
    for (size_t j = i + 1; j < c.size(); ++j) {
      IVec3 n = cross(c[i].v(), c[j].v());
      if (n.is_zero()) continue;
      for (const Ray& r : c) {
        if (sgn(dot(n, r.v())) != 0) return false;
      }
      return true;
    }
  }
  return true;
}

}  // namespace

SphericalPolygon SphericalPolygon::from_cycle(std::vector<Ray> cycle, std::string label,
                                              std::optional<Ray> pole) {
  SphericalPolygon p;
  p.label_ = std::move(label);
  if (cycle.size() < 2) throw Error(ErrorKind::kInvalidArgument, "spherical polygon needs vertices");
  if (on_one_circle(cycle)) {
    if (!pole) {
      throw Error(ErrorKind::kInvalidArgument, "flat spherical polygon needs a pole");
    }
    IVec3 sum;
    for (const Ray& r : cycle) sum = sum + r.v();
    // Counter-clockwise around the pole.
    if (cycle.size() >= 2 && sgn(det3(pole->v(), cycle[0].v(), cycle[1].v())) < 0) {
      std::reverse(cycle.begin(), cycle.end());
    }
    p.cycle_ = std::move(cycle);
    p.pole_ = pole;
    p.hemispheres_ = {pole->v()};
    for (const Ray& r : p.cycle_) p.generators_.push_back(r.v());
    p.generators_.push_back(pole->v());
    return p;
  }
  IVec3 c;
  for (const Ray& r : cycle) c = c + r.v();
  BigInt orient = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    orient += det3(c, cycle[i].v(), cycle[(i + 1) % cycle.size()].v());
  }
  if (sgn(orient) < 0) std::reverse(cycle.begin(), cycle.end());
  p.cycle_ = std::move(cycle);
  const size_t n = p.cycle_.size();
  for (size_t i = 0; i < n; ++i) {
    IVec3 h = cross(p.cycle_[i].v(), p.cycle_[(i + 1) % n].v());
    if (!h.is_zero()) p.hemispheres_.push_back(h.primitive());
    p.generators_.push_back(p.cycle_[i].v());
  }
  return p;
}

bool SphericalPolygon::contains(const IVec3& x) const {
  for (const IVec3& h : hemispheres_) {
    if (sgn(dot(h, x)) < 0) return false;
  }
  return true;
}

bool SphericalPolygon::contains_open(const IVec3& x) const {
  for (const IVec3& h : hemispheres_) {
    if (sgn(dot(h, x)) <= 0) return false;
  }
  return true;
}

bool SphericalPolygon::meets_circle(const PerturbedRay& u) const {
  bool pos = false, neg = false;
  for (const IVec3& g : generators_) {
    int s = sign_dot(u, g);
    pos |= s > 0;
    neg |= s < 0;
    if (pos && neg) return true;
  }
  return false;
}

bool SphericalPolygon::is_convex() const {
  if (pole_) return true;
  const size_t n = cycle_.size();
  if (n < 3) return false;
  bool strict = false;
  for (size_t i = 0; i < n; ++i) {
    int s = sgn(det3(cycle_[i].v(), cycle_[(i + 1) % n].v(), cycle_[(i + 2) % n].v()));
    if (s < 0) return false;
    strict |= s > 0;
  }
  // Every vertex on the inner side of every edge plane.
  for (const IVec3& h : hemispheres_) {
    for (const Ray& r : cycle_) {
      if (sgn(dot(h, r.v())) < 0) return false;
    }
  }
  return strict;
}

std::vector<Ray> SphericalSubdivision::vertices() const {
  std::set<Ray> s;
  for (const SphericalPolygon& r : regions) s.insert(r.cycle().begin(), r.cycle().end());
  return {s.begin(), s.end()};
}

std::vector<std::pair<Ray, Ray>> SphericalSubdivision::edges() const {
  std::set<std::pair<Ray, Ray>> s;
  for (const SphericalPolygon& r : regions) {
    const auto& c = r.cycle();
    for (size_t i = 0; i < c.size(); ++i) {
      const Ray& a = c[i];
      const Ray& b = c[(i + 1) % c.size()];
      s.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    }
  }
  return {s.begin(), s.end()};
}

std::vector<IVec3> sort_around(const IVec3& axis, std::vector<IVec3> v) {
  IVec3 e = sgn(axis[0]) == 0 && sgn(axis[1]) == 0 ? IVec3(1, 0, 0) : IVec3(0, 0, 1);
  IVec3 e1 = cross(axis, e);
  if (e1.is_zero()) e1 = cross(axis, IVec3(0, 1, 0));
  IVec3 e2 = cross(axis, e1);
  auto half = [&](const IVec3& a) {
    int s2 = sgn(dot(a, e2)), s1 = sgn(dot(a, e1));
    // Angle measured from e1 towards e2: [0, pi) is half 0.
    return (s2 > 0 || (s2 == 0 && s1 > 0)) ? 0 : 1;
  };
  std::stable_sort(v.begin(), v.end(), [&](const IVec3& a, const IVec3& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sgn(det3(axis, a, b)) > 0;
  });
  return v;
}

SphericalSubdivision spherical_image(const Polyhedron& p) {
  SphericalSubdivision d;
  d.kind = p.bounded() ? SphericalSubdivision::Kind::kFull : SphericalSubdivision::Kind::kPartial;
  for (size_t v = 0; v < p.vertices().size(); ++v) {
    std::vector<Ray> cyc;
    for (int f : p.vertex_face_cycle(static_cast<int>(v))) cyc.push_back(p.faces()[f].normal);
    d.regions.push_back(SphericalPolygon::from_cycle(std::move(cyc), "v" + std::to_string(v)));
  }
  if (!p.bounded()) d.support = support_of_cone(p.rays());
  return d;
}

SphericalPolygon support_of_cone(const std::vector<Ray>& generators) {
  std::vector<IVec3> g;
  for (const Ray& r : generators) g.push_back(r.v());
  bool rank3 = false;
  for (size_t i = 0; i < g.size() && !rank3; ++i)
    for (size_t j = i + 1; j < g.size() && !rank3; ++j)
      for (size_t k = j + 1; k < g.size() && !rank3; ++k) rank3 = sgn(det3(g[i], g[j], g[k])) != 0;
  if (!rank3) throw Error(ErrorKind::kUnsupportedShape, "cone is not full-dimensional");
  std::set<IVec3> seen;
  std::vector<IVec3> ext;
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      IVec3 c = cross(g[i], g[j]);
      if (c.is_zero()) continue;
      c = c.primitive();
      for (const IVec3& y : {c, IVec3(-c)}) {
        bool ok = true;
        for (const IVec3& x : g) {
          if (sgn(dot(y, x)) > 0) { ok = false; break; }
        }
        if (ok && seen.insert(y).second) ext.push_back(y);
      }
    }
  }
  IVec3 sum;
  for (const IVec3& y : ext) sum = sum + y;
  bool pointed = ext.size() >= 3;
  for (const IVec3& x : g) {
    if (!pointed) break;
    if (sgn(dot(sum, x)) >= 0) pointed = false;
  }
  if (!pointed) throw Error(ErrorKind::kUnsupportedShape, "cone is not pointed");
  std::vector<Ray> cyc;
  for (const IVec3& y : sort_around(sum, ext)) cyc.push_back(Ray(y));
  return SphericalPolygon::from_cycle(std::move(cyc), "support");
}

int circle_span(const SphericalSubdivision& d, const PerturbedRay& u) {
  int c = 0;
  for (const SphericalPolygon& r : d.regions) c += r.meets_circle(u);
  return c;
}

CircleSpanResult great_circle_span(const SphericalSubdivision& d, Exec exec) {
  std::vector<IVec3> gens;
  for (const SphericalPolygon& r : d.regions) {
    gens.insert(gens.end(), r.generators().begin(), r.generators().end());
  }
  std::vector<PerturbedRay> cand = arrangement_samples(gens, false);
  if (cand.empty()) {
    cand = {PerturbedRay(IVec3(1, 0, 0), IVec3(0, 1, 0), IVec3(0, 0, 1)),
            PerturbedRay(IVec3(0, 1, 0), IVec3(0, 0, 1), IVec3(1, 0, 0)),
            PerturbedRay(IVec3(0, 0, 1), IVec3(1, 0, 0), IVec3(0, 1, 0))};
  }
  ArgMax best = argmax(cand.size(), exec, [&](size_t i) -> int64_t {
    return circle_span(d, cand[i]);
  });
  return {static_cast<int>(best.value), cand[best.index]};
}

int completed_edge_crossings(const SphericalSubdivision& d, const PerturbedRay& u) {
  int c = 0;
  for (const auto& [a, b] : d.edges()) {
    int sa = sign_dot(u, a.v()), sb = sign_dot(u, b.v());
    if (sa == 0 || sb == 0) {
      throw Error(ErrorKind::kDegenerate, "circle passes through a subdivision vertex");
    }
    c += sa * sb < 0;
  }
  return c;
}

CoverageAudit audit_coverage(const SphericalSubdivision& d, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  CoverageAudit a;
  while (a.samples < samples) {
    IVec3 x(dist(rng), dist(rng), dist(rng));
    if (x.is_zero()) continue;
    bool boundary = false;
    int closed = 0, open = 0;
    for (const SphericalPolygon& r : d.regions) {
      bool c = r.contains(x), o = r.contains_open(x);
      closed += c;
      open += o;
      boundary |= c && !o;
    }
    if (d.support && d.support->contains(x) && !d.support->contains_open(x)) boundary = true;
    if (boundary) {
      ++a.resampled;
      continue;
    }
    ++a.samples;
    bool inside = !d.support || d.support->contains_open(x);
    if (!inside) {
      ++a.outside_support;
      if (closed > 0) ++a.leaked;
      continue;
    }
    if (closed == 0) ++a.uncovered;
    if (open > 1) ++a.multiply_open;
  }
  return a;
}

}  // namespace moser
