#include "moser/gnomonic.h"

#include <random>
#include <sstream>

namespace moser {

RVec2 gnomonic(const Ray& r) {
  if (sgn(r[2]) >= 0) {
    throw Error(ErrorKind::kOutOfHemisphere, "ray " + r.str() + " is not in the lower hemisphere");
  }
  BigInt w = -r[2];
  return {ExactRatio(r[0], w), ExactRatio(r[1], w)};
}

Ray gnomonic_inverse(const RVec2& p) { return Ray(RVec3{p.x, p.y, ExactRatio(-1)}); }

IVec3 sphere_to_homogeneous(const IVec3& v) { return IVec3(v[0], v[1], BigInt(-v[2])); }

RationalRotation::RationalRotation(BigInt a, BigInt b, BigInt c, BigInt d)
    : q_{a, b, c, d} {
  norm_ = a * a + b * b + c * c + d * d;
  if (sgn(norm_) == 0) throw Error(ErrorKind::kInvalidArgument, "zero quaternion");
  m_[0] = {BigInt(a * a + b * b - c * c - d * d), BigInt(2 * (b * c - a * d)),
           BigInt(2 * (b * d + a * c))};
  m_[1] = {BigInt(2 * (b * c + a * d)), BigInt(a * a - b * b + c * c - d * d),
           BigInt(2 * (c * d - a * b))};
  m_[2] = {BigInt(2 * (b * d - a * c)), BigInt(2 * (c * d + a * b)),
           BigInt(a * a - b * b - c * c + d * d)};
}

RationalRotation RationalRotation::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<BigInt> v;
  while (std::getline(ss, part, ',')) {
    ExactRatio r = ExactRatio::parse(part);
    if (r.den() != 1) throw Error(ErrorKind::kParse, "quaternion entries must be integers");
    v.push_back(r.num());
  }
  if (v.size() != 4) throw Error(ErrorKind::kParse, "quaternion needs 4 entries: " + text);
  return RationalRotation(v[0], v[1], v[2], v[3]);
}

ExactRatio RationalRotation::entry(int i, int j) const { return ExactRatio(m_[i][j], norm_); }

IVec3 RationalRotation::apply(const IVec3& v) const {
  IVec3 out;
  for (int i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return out;
}

bool RationalRotation::is_orthogonal() const {
  BigInt n2 = norm_ * norm_;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BigInt s = m_[i][0] * m_[j][0] + m_[i][1] * m_[j][1] + m_[i][2] * m_[j][2];
      if (s != (i == j ? n2 : BigInt(0))) return false;
    }
  IVec3 r0(m_[0][0], m_[0][1], m_[0][2]), r1(m_[1][0], m_[1][1], m_[1][2]),
      r2(m_[2][0], m_[2][1], m_[2][2]);
  return det3(r0, r1, r2) == n2 * norm_;
}

std::string RationalRotation::str() const {
  return q_[0].get_str() + "," + q_[1].get_str() + "," + q_[2].get_str() + "," + q_[3].get_str();
}

SphericalSubdivision rotate(const SphericalSubdivision& d, const RationalRotation& rot) {
  auto move = [&](const SphericalPolygon& p) {
    std::vector<Ray> cyc;
    for (const Ray& r : p.cycle()) cyc.push_back(rot.apply(r));
    std::optional<Ray> pole;
    if (p.pole()) pole = rot.apply(*p.pole());
    return SphericalPolygon::from_cycle(std::move(cyc), p.label(), pole);
  };
  SphericalSubdivision out;
  out.kind = d.kind;
  for (const SphericalPolygon& p : d.regions) out.regions.push_back(move(p));
  if (d.support) out.support = move(*d.support);
  return out;
}

namespace {

// Intersection of a region's hemispheres with the lower hemisphere, as a
// planar cycle; empty when the interior misses it.
std::vector<IVec3> lower_part(const SphericalPolygon& p, const RationalRotation& rot) {
  std::vector<IVec3> cyc = whole_plane_cycle();
  for (const IVec3& h : p.hemispheres()) {
    cyc = clip_cycle(cyc, sphere_to_homogeneous(rot.apply(h)));
    if (cyc.empty()) break;
  }
  return cyc;
}

}  // namespace

PlanarSubdivision project_subdivision(const SphericalSubdivision& d, const RationalRotation& rot) {
  PlanarSubdivision out;
  for (const SphericalPolygon& p : d.regions) {
    std::vector<IVec3> cyc = lower_part(p, rot);
    if (cyc.empty()) continue;
    PlanarRegion r = PlanarRegion::from_homogeneous(std::move(cyc));
    r.label = p.label();
    out.regions.push_back(std::move(r));
  }
  return out;
}

RotationSearch find_rotation_covering_half(const SphericalSubdivision& d, int budget,
                                           uint64_t seed) {
  const int n = static_cast<int>(d.regions.size());
  RotationSearch best;
  best.target = (n + 1) / 2;
  best.k = -1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int t = 1; t <= budget; ++t) {
    long a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
    // Near-zero quaternions give coarse rotations; skip them.
    if (a * a + b * b + c * c + e * e < 100) { --t; continue; }
    RationalRotation rot(a, b, c, e);
    int k = 0;
    for (const SphericalPolygon& p : d.regions) k += !lower_part(p, rot).empty();
    if (k > best.k) {
      best.k = k;
      best.rotation = rot;
    }
    best.trials = t;
    if (k >= best.target) {
      best.met = true;
      return best;
    }
  }
  return best;
}

}  // namespace moser
