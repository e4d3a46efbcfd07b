// Central projection between the open lower hemisphere and the plane
// z = -1, exact rotations, and transport of spherical subdivisions.

#ifndef MOSER_GNOMONIC_H_
#define MOSER_GNOMONIC_H_

#include <array>
#include <cstdint>
#include <string>

#include "moser/exact.h"
#include "moser/planar.h"
#include "moser/spherical.h"

namespace moser {

// (x, y, z) with z < 0 maps to (x / -z, y / -z).
RVec2 gnomonic(const Ray& r);
Ray gnomonic_inverse(const RVec2& p);
// Homogeneous planar image (x, y, -z) of a direction; W > 0 exactly on
// the open lower hemisphere.
IVec3 sphere_to_homogeneous(const IVec3& v);

// Rotation by the unit quaternion q / |q|, with rational entries.
class RationalRotation {
 public:
  RationalRotation() : RationalRotation(1, 0, 0, 0) {}
  RationalRotation(BigInt a, BigInt b, BigInt c, BigInt d);
  RationalRotation(long a, long b, long c, long d)
      : RationalRotation(BigInt(a), BigInt(b), BigInt(c), BigInt(d)) {}

  // Parses "a,b,c,d".
  static RationalRotation parse(const std::string& text);

  ExactRatio entry(int i, int j) const;
  // Positive multiple of M v.
  IVec3 apply(const IVec3& v) const;
  Ray apply(const Ray& r) const { return Ray(apply(r.v())); }
  // M M^T = I and det M = +1, checked exactly.
  bool is_orthogonal() const;
  const std::array<BigInt, 4>& quaternion() const { return q_; }
  std::string str() const;

 private:
  std::array<BigInt, 4> q_;
  std::array<std::array<BigInt, 3>, 3> m_;  // N * M, N = |q|^2
  BigInt norm_;
};

SphericalSubdivision rotate(const SphericalSubdivision& d, const RationalRotation& rot);

// Regions of the rotated subdivision meeting the open lower hemisphere,
// mapped to the plane z = -1. Other regions are dropped.
PlanarSubdivision project_subdivision(const SphericalSubdivision& d, const RationalRotation& rot);

struct RotationSearch {
  RationalRotation rotation;
  int k = 0;        // regions meeting the open lower hemisphere
  int target = 0;   // ceil(n / 2)
  int trials = 0;
  bool met = false;
};

// Random rational rotations until k >= ceil(n / 2). On an exhausted budget
// the best rotation is returned with met = false.
RotationSearch find_rotation_covering_half(const SphericalSubdivision& d, int budget,
                                           uint64_t seed);

}  // namespace moser

#endif  // MOSER_GNOMONIC_H_
