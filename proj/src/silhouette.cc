#include "moser/silhouette.h"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "moser/shadow.h"

namespace moser {

ViewPoint ViewPoint::finite(const RVec3& q) {
  ViewPoint v;
  v.point = q;
  return v;
}

ViewPoint ViewPoint::perturbed(const RVec3& q, const PerturbedRay& offset) {
  ViewPoint v;
  v.point = q;
  v.offset = offset;
  return v;
}

ViewPoint ViewPoint::infinite(const PerturbedRay& d) {
  ViewPoint v;
  v.at_infinity = true;
  v.direction = d;
  return v;
}

std::string ViewPoint::str() const {
  if (at_infinity) return "inf*(" + direction.str() + ")";
  std::string s = "(" + point.x.str() + "," + point.y.str() + "," + point.z.str() + ")";
  if (offset.is_perturbed() || !offset.base.is_zero()) s += "+e(" + offset.str() + ")";
  return s;
}

namespace {

using H4 = std::array<BigInt, 4>;  // (X, Y, Z, D), D > 0

H4 homogeneous(const RVec3& q) {
  BigInt l = q.x.den();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.y.den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.z.den().get_mpz_t());
  return {BigInt(q.x.num() * (l / q.x.den())), BigInt(q.y.num() * (l / q.y.den())),
          BigInt(q.z.num() * (l / q.z.den())), l};
}

// sign(<row, q> - offset) for q = (X, Y, Z) / D.
int plane_side(const Face& f, const H4& q) {
  BigInt s = f.row[0] * q[0] + f.row[1] * q[1] + f.row[2] * q[2] - f.row_offset * q[3];
  return sgn(s);
}

void check_signs(const std::vector<int>& s, const std::string& where) {
  bool visible = std::any_of(s.begin(), s.end(), [](int x) { return x > 0; });
  if (!visible) throw Error(ErrorKind::kInvalidViewpoint, where + " lies in the polyhedron");
  for (size_t f = 0; f < s.size(); ++f) {
    if (s[f] == 0) {
      throw Error(ErrorKind::kDegenerate, where + " is on the plane of face " + std::to_string(f));
    }
  }
}

int count_mixed(const Polyhedron& p, const std::vector<int>& s) {
  int c = 0;
  for (size_t v = 0; v < p.vertices().size(); ++v) {
    bool pos = false, neg = false;
    for (int f : p.vertex_faces(static_cast<int>(v))) (s[f] > 0 ? pos : neg) = true;
    if (pos && neg) ++c;
  }
  return c;
}

RVec2 hull_point(const IVec3& g, const IVec3& n, const ExactRatio& m) {
  ExactRatio l = ExactRatio(BigInt(n[0] * g[0] + n[1] * g[1])) + m * ExactRatio(g[2]);
  return {ExactRatio(g[0]) / l, ExactRatio(g[1]) / l};
}

// Strict vertices of the convex hull, counter-clockwise.
std::vector<size_t> hull(const std::vector<RVec2>& pts) {
  std::vector<size_t> idx(pts.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](size_t a, size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<size_t> h(2 * idx.size());
  size_t k = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && orient2d(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

RVec3 centroid(const Polyhedron& p) {
  RVec3 c{0, 0, 0};
  for (const RVec3& v : p.vertices()) c = c + v;
  return c * ExactRatio(BigInt(1), BigInt(static_cast<long>(p.vertices().size())));
}

RVec3 along(const PerturbedRay& d, const ExactRatio& delta) {
  return d.base.to_rvec() + d.first.to_rvec() * delta + d.second.to_rvec() * (delta * delta);
}

}  // namespace

std::vector<int> visibility(const Polyhedron& p, const ViewPoint& q) {
  const auto& faces = p.faces();
  std::vector<int> s(faces.size());
  if (q.at_infinity) {
    for (size_t f = 0; f < faces.size(); ++f) s[f] = sign_dot(q.direction, faces[f].row);
  } else {
    H4 h = homogeneous(q.point);
    for (size_t f = 0; f < faces.size(); ++f) {
      s[f] = plane_side(faces[f], h);
      if (s[f] == 0) s[f] = sign_dot(q.offset, faces[f].row);
    }
  }
  check_signs(s, "viewpoint " + q.str());
  return s;
}

int silhouette_count(const Polyhedron& p, const ViewPoint& q) {
  return count_mixed(p, visibility(p, q));
}

int point_silhouette(const Polyhedron& p, const RVec3& q, const Plane& h) {
  if (h.normal.is_zero()) throw Error(ErrorKind::kInvalidScreen, "screen normal is zero");
  ExactRatio gap = h.offset - dot(h.normal, q);
  if (gap.sign() <= 0) throw Error(ErrorKind::kInvalidScreen, "viewpoint is not below the screen");
  for (const RVec3& v : p.vertices()) {
    if (dot(h.normal, v) <= h.offset) {
      throw Error(ErrorKind::kInvalidScreen, "screen does not separate a vertex from the viewpoint");
    }
  }
  for (const Ray& r : p.rays()) {
    if (dot(h.normal, r.v().to_rvec()).sign() < 0) {
      throw Error(ErrorKind::kInvalidScreen, "an unbounded direction crosses the screen");
    }
  }

  // Homogeneous coordinates on the screen: W = 0 collects directions
  // parallel to it, everything else is finite.
  auto [b1, b2] = orthogonal_basis(Ray(h.normal));
  RVec3 r1 = b1.to_rvec(), r2 = b2.to_rvec();
  std::vector<IVec3> gens;
  auto push = [&](const RVec3& w) {
    gens.push_back(integer_direction({dot(w, r1), dot(w, r2), dot(w, h.normal) / gap}));
  };
  for (const RVec3& v : p.vertices()) push(v - q);
  for (const Ray& r : p.rays()) push(r.v().to_rvec());

  std::vector<IVec3> dirs;
  for (const IVec3& g : gens)
    if (sgn(g[2]) == 0) dirs.push_back(g);
  IVec3 n;  // <n, d> > 0 on every direction
  if (!dirs.empty()) {
    auto cw_extreme = [&](const IVec3& a) {
      for (const IVec3& d : dirs) {
        BigInt c = a[0] * d[1] - a[1] * d[0];
        if (sgn(c) < 0 || (sgn(c) == 0 && sgn(a[0] * d[0] + a[1] * d[1]) < 0)) return false;
      }
      return true;
    };
    auto ccw_extreme = [&](const IVec3& a) {
      for (const IVec3& d : dirs) {
        BigInt c = d[0] * a[1] - d[1] * a[0];
        if (sgn(c) < 0 || (sgn(c) == 0 && sgn(a[0] * d[0] + a[1] * d[1]) < 0)) return false;
      }
      return true;
    };
    auto d1 = std::find_if(dirs.begin(), dirs.end(), cw_extreme);
    auto d2 = std::find_if(dirs.begin(), dirs.end(), ccw_extreme);
    // The directions contain a line: a half-plane, a strip or all of H.
    if (d1 == dirs.end() || d2 == dirs.end()) return 0;
    const IVec3& a = *d1;
    const IVec3& b = *d2;
    if (sgn(a[0] * b[1] - a[1] * b[0]) == 0) {
      n = IVec3(a[0], a[1], BigInt(0));
    } else {
      n = IVec3(BigInt(b[1] - a[1]), BigInt(a[0] - b[0]), BigInt(0));
    }
  }
  ExactRatio m(1);
  for (const IVec3& g : gens) {
    if (sgn(g[2]) == 0) continue;
    ExactRatio need = ExactRatio(BigInt(-(n[0] * g[0] + n[1] * g[1])), g[2]) + ExactRatio(1);
    if (need > m) m = need;
  }
  std::vector<RVec2> pts;
  pts.reserve(gens.size());
  for (const IVec3& g : gens) pts.push_back(hull_point(g, n, m));
  int c = 0;
  for (size_t i : hull(pts)) {
    bool finite = false;
    for (size_t j = 0; j < pts.size(); ++j)
      if (pts[j] == pts[i] && sgn(gens[j][2]) > 0) finite = true;
    if (finite) ++c;
  }
  return c;
}

ScreenSample sample_screens(const Polyhedron& p, const RVec3& q, int screens, uint64_t seed) {
  if (screens < 1) throw Error(ErrorKind::kInvalidArgument, "screens must be >= 1");
  std::vector<int> s = visibility(p, ViewPoint::finite(q));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> lam(1, 20);
  ScreenSample out;
  for (int t = 0; t < screens; ++t) {
    RVec3 h{0, 0, 0};
    for (size_t f = 0; f < s.size(); ++f) {
      if (s[f] < 0) continue;
      ExactRatio l(t == 0 ? 1L : lam(rng));
      h = h - p.faces()[f].row.to_rvec() * l;
    }
    ExactRatio lo = dot(h, q);
    ExactRatio hi = dot(h, p.vertices()[0]);
    for (const RVec3& v : p.vertices()) hi = std::min(hi, dot(h, v));
    int c = point_silhouette(p, q, {h, (lo + hi) * ExactRatio(BigInt(1), BigInt(2))});
    out.min = t == 0 ? c : std::min(out.min, c);
    out.max = t == 0 ? c : std::max(out.max, c);
    ++out.screens;
  }
  return out;
}

std::optional<RVec3> realize(const Polyhedron& p, const ViewPoint& q) {
  std::vector<int> target = visibility(p, q);
  bool plain = !q.at_infinity && q.offset.base.is_zero() && !q.offset.is_perturbed();
  if (plain) return q.point;
  RVec3 c = q.at_infinity ? centroid(p) : q.point;
  for (int j = 1; j <= 400; ++j) {
    BigInt pow2 = BigInt(1) << j;
    ExactRatio small(BigInt(1), pow2);
    RVec3 x = q.at_infinity ? c + along(q.direction, small) * ExactRatio(pow2)
                            : c + along(q.offset, small) * small;
    try {
      if (visibility(p, ViewPoint::finite(x)) == target) return x;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

namespace {

struct Group {
  H4 point;
  std::vector<int> base;  // plane sides, 0 on incident planes
  std::vector<int> incident;
};

struct Candidate {
  int group = -1;  // -1 for a source at infinity
  PerturbedRay dir;
};

std::vector<Group> plane_points(const Polyhedron& p) {
  const auto& faces = p.faces();
  std::set<H4> seen;
  int f = static_cast<int>(faces.size());
  for (int i = 0; i < f; ++i)
    for (int j = i + 1; j < f; ++j) {
      IVec3 ij = cross(faces[i].row, faces[j].row);
      if (ij.is_zero()) continue;
      for (int k = j + 1; k < f; ++k) {
        BigInt d = dot(ij, faces[k].row);
        if (sgn(d) == 0) continue;
        IVec3 x = cross(faces[j].row, faces[k].row) * faces[i].row_offset +
                  cross(faces[k].row, faces[i].row) * faces[j].row_offset +
                  ij * faces[k].row_offset;
        if (sgn(d) < 0) {
          x = -x;
          d = -d;
        }
        BigInt g = d;
        for (int t = 0; t < 3; ++t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x[t].get_mpz_t());
        seen.insert({BigInt(x[0] / g), BigInt(x[1] / g), BigInt(x[2] / g), BigInt(d / g)});
      }
    }
  std::vector<Group> out;
  out.reserve(seen.size());
  for (const H4& h : seen) {
    Group g;
    g.point = h;
    g.base.resize(faces.size());
    for (int i = 0; i < f; ++i) {
      g.base[i] = plane_side(faces[i], h);
      if (g.base[i] == 0) g.incident.push_back(i);
    }
    out.push_back(std::move(g));
  }
  return out;
}

RVec3 dehomogenize(const H4& h) {
  return {ExactRatio(h[0], h[3]), ExactRatio(h[1], h[3]), ExactRatio(h[2], h[3])};
}

}  // namespace

SilhouetteSpan silhouette_span(const Polyhedron& p, Exec exec) {
  const auto& faces = p.faces();
  std::vector<Group> groups = plane_points(p);
  std::vector<Candidate> cand;
  for (size_t g = 0; g < groups.size(); ++g) {
    std::vector<IVec3> normals;
    for (int f : groups[g].incident) normals.push_back(faces[f].row);
    // One sample per cell of the planes through the point.
    std::set<std::vector<int>> cells;
    for (const PerturbedRay& d : arrangement_samples(normals, true)) {
      std::vector<int> key;
      for (const IVec3& n : normals) key.push_back(sign_dot(d, n));
      if (cells.insert(key).second) cand.push_back({static_cast<int>(g), d});
    }
  }
  // Points beyond the bounding box, for cells without a vertex.
  ExactRatio far(1);
  for (const RVec3& v : p.vertices()) {
    for (const ExactRatio& c : {v.x, v.y, v.z}) far = std::max(far, c.sign() < 0 ? -c : c);
  }
  far = far * ExactRatio(2) + ExactRatio(1);
  std::vector<RVec3> outer;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        if (a != 0 || b != 0 || c != 0) outer.push_back(RVec3{a, b, c} * far);
  for (const RVec3& x : outer) {
    Group g;
    g.point = homogeneous(x);
    g.base.resize(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) {
      g.base[i] = plane_side(faces[i], g.point);
      if (g.base[i] == 0) g.incident.push_back(static_cast<int>(i));
    }
    groups.push_back(std::move(g));
    cand.push_back({static_cast<int>(groups.size() - 1),
                    PerturbedRay(IVec3(1, 0, 0), IVec3(0, 1, 0), IVec3(0, 0, 1))});
  }
  size_t n_finite = cand.size();
  for (const PerturbedRay& d : candidate_directions(p)) cand.push_back({-1, d});

  std::vector<int> count(cand.size(), -1);
  parallel_for(cand.size(), exec, [&](size_t i) {
    const Candidate& c = cand[i];
    std::vector<int> s(faces.size());
    if (c.group < 0) {
      for (size_t f = 0; f < faces.size(); ++f) s[f] = sign_dot(c.dir, faces[f].row);
    } else {
      s = groups[c.group].base;
      for (int f : groups[c.group].incident) s[f] = sign_dot(c.dir, faces[f].row);
    }
    if (std::none_of(s.begin(), s.end(), [](int x) { return x > 0; })) return;
    if (std::any_of(s.begin(), s.end(), [](int x) { return x == 0; })) return;
    count[i] = count_mixed(p, s);
  });

  SilhouetteSpan out;
  out.candidates = static_cast<int>(cand.size());
  size_t best = cand.size();
  for (size_t i = 0; i < cand.size(); ++i) {
    if (count[i] < 0) continue;
    (i < n_finite ? out.finite_best : out.infinite_best) =
        std::max(i < n_finite ? out.finite_best : out.infinite_best, count[i]);
    if (best == cand.size() || count[i] > count[best]) best = i;
  }
  if (best == cand.size()) throw Error(ErrorKind::kInvariantViolation, "no admissible viewpoint");
  out.count = count[best];
  const Candidate& w = cand[best];
  out.witness = w.group < 0 ? ViewPoint::infinite(w.dir)
                            : ViewPoint::perturbed(dehomogenize(groups[w.group].point), w.dir);
  out.finite_witness = realize(p, out.witness);
  return out;
}

}  // namespace moser
