// Shared fixtures for the unit tests.

#ifndef MOSER_TESTS_TEST_UTIL_H_
#define MOSER_TESTS_TEST_UTIL_H_

#include <random>
#include <vector>

#include "moser/exact.h"
#include "moser/polyhedron.h"

namespace moser::testing {

inline std::vector<RVec3> cube_points(long lo = 0, long hi = 1) {
  std::vector<RVec3> pts;
  for (long x : {lo, hi})
    for (long y : {lo, hi})
      for (long z : {lo, hi}) pts.push_back({x, y, z});
  return pts;
}

inline Polyhedron cube() { return Polyhedron::from_vrep(cube_points()); }

inline Polyhedron simplex() {
  return Polyhedron::from_vrep({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// Regular tetrahedron with integer vertices.
inline Polyhedron regular_simplex() {
  return Polyhedron::from_vrep({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

inline Polyhedron orthant() {
  return Polyhedron::from_hrep({{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}});
}

// Random points in general-ish position inside a ball of radius ~range.
inline std::vector<RVec3> random_points(std::mt19937_64& g, int count, long range = 1000) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<RVec3> pts;
  while (static_cast<int>(pts.size()) < count) {
    long x = d(g), y = d(g), z = d(g);
    if (x * x + y * y + z * z > range * range) continue;
    pts.push_back({x, y, z});
  }
  return pts;
}

// Random bounded polytope with exactly `vertices` extreme points.
inline Polyhedron random_polytope(std::mt19937_64& g, int vertices) {
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (;;) {
    std::vector<RVec3> pts;
    while (static_cast<int>(pts.size()) < vertices) {
      // Points near a sphere so that most are extreme.
      long x = d(g), y = d(g), z = d(g);
      long r2 = x * x + y * y + z * z;
      if (r2 < 640000 || r2 > 1000000) continue;
      pts.push_back({x, y, z});
    }
    Polyhedron p = Polyhedron::from_vrep(pts);
    if (static_cast<int>(p.vertices().size()) == vertices) return p;
  }
}

inline Ray random_ray(std::mt19937_64& g, long range = 1000) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    IVec3 v(d(g), d(g), d(g));
    if (!v.is_zero()) return Ray(v);
  }
}

}  // namespace moser::testing

#endif  // MOSER_TESTS_TEST_UTIL_H_
