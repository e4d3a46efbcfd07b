#include "moser/shadow.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.h"

namespace moser {
namespace {

using testing::cube;
using testing::orthant;
using testing::simplex;

// Independent oracle: strict convex hull vertex count (monotone chain).
int hull_vertex_count(std::vector<RVec2> pts) {
  std::sort(pts.begin(), pts.end());
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

int projected_hull(const Polyhedron& p, const Ray& u) {
  // Projection along u onto an independent basis built with a fixed axis
  // choice, not the module's.
  IVec3 e = sgn(u[2]) != 0 ? IVec3(1, 0, 0) : IVec3(0, 0, 1);
  if (cross(u.v(), e).is_zero()) e = IVec3(0, 1, 0);
  RVec3 b1 = cross(u.v(), e).to_rvec();
  RVec3 b2 = cross(u.v().to_rvec(), b1);
  std::vector<RVec2> pts;
  for (const RVec3& v : p.vertices()) pts.push_back({dot(v, b1), dot(v, b2)});
  return hull_vertex_count(pts);
}

TEST(ShadowCountTest, Examples) {
  // The perturbed axis direction has all three components nonzero, so the
  // shadow is a hexagon with two infinitesimal edges, not the square seen
  // along the exact axis.
  PerturbedRay axis(IVec3(0, 0, 1), IVec3(1, 0, 0), IVec3(0, 1, 0));
  EXPECT_EQ(shadow_count(cube(), axis), 6);
  EXPECT_EQ(projected_hull(cube(), Ray(1, 2, 1000)), 6);
  EXPECT_EQ(shadow_count(cube(), Ray(1, 1, 1)), 6);
  EXPECT_EQ(projected_hull(cube(), Ray(1, 1, 1)), 6);
  EXPECT_EQ(shadow_count(orthant(), Ray(1, 1, 1)), 0);
  EXPECT_EQ(shadow_count(simplex(), Ray(1, 1, 1)), 3);
}

TEST(ShadowCountTest, DegenerateDirectionRejected) {
  try {
    shadow_count(cube(), Ray(0, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
    EXPECT_NE(std::string(e.what()).find("face"), std::string::npos);
  }
}

TEST(ShadowCountTest, UnboundedShadowOfTruncatedOrthant) {
  Polyhedron p = Polyhedron::from_hrep(
      {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{-1, -1, -1}, -1}});
  // Boundary edges: two unbounded edges and two triangle edges.
  Ray u(IVec3(1, 2, -7));
  EXPECT_EQ(boundary_edges(p, u).size(), 4u);
  EXPECT_EQ(shadow_count(p, u), 3);
  ShadowPolygon sp = shadow_polygon(p, u);
  EXPECT_EQ(sp.cycle.size(), 3u);
  EXPECT_EQ(sp.rays.size(), 2u);
  EXPECT_FALSE(sp.fills_plane);
  EXPECT_EQ(shadow_count(orthant(), Ray(1, 2, -7)), 1);
}

TEST(ShadowPolygonTest, Examples) {
  ShadowPolygon hex = shadow_polygon(cube(), Ray(IVec3(1, 2, 30)));
  EXPECT_EQ(hex.cycle.size(), 6u);
  // Square pyramid from above: the apex projects inside the base.
  Polyhedron pyr = Polyhedron::from_vrep({{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}, {0, 0, 1}});
  ShadowPolygon sq = shadow_polygon(pyr, Ray(0, 0, 1));
  ASSERT_EQ(sq.cycle.size(), 4u);
  EXPECT_EQ(orient2d(sq.cycle[0], sq.cycle[1], sq.cycle[2]), 1);
  ShadowPolygon tri = shadow_polygon(simplex(), Ray(1, 1, 1));
  EXPECT_EQ(tri.cycle.size(), 3u);
  for (size_t i = 0; i < tri.cycle.size(); ++i) {
    EXPECT_EQ(orient2d(tri.cycle[i], tri.cycle[(i + 1) % 3], tri.cycle[(i + 2) % 3]), 1);
  }
  EXPECT_TRUE(shadow_polygon(orthant(), Ray(1, 1, 1)).fills_plane);
  auto [b1, b2] = orthogonal_basis(Ray(0, 0, 1));
  EXPECT_EQ(dot(b1, IVec3(0, 0, 1)), 0);
  EXPECT_EQ(dot(b2, IVec3(0, 0, 1)), 0);
  EXPECT_FALSE(cross(b1, b2).is_zero());
}

TEST(CandidateDirectionsTest, Counts) {
  EXPECT_EQ(candidate_directions(cube()).size(), 24u);
  EXPECT_EQ(candidate_directions(simplex()).size(), 48u);
}

TEST(ShadowNumberTest, KnownValues) {
  EXPECT_EQ(shadow_number(cube()).count, 6);
  EXPECT_EQ(shadow_number(testing::regular_simplex()).count, 4);
  EXPECT_EQ(shadow_number(simplex()).count, 4);
  EXPECT_EQ(shadow_number(orthant()).count, 1);
  DirectionWitness w = shadow_number(cube());
  EXPECT_EQ(static_cast<int>(w.boundary_edges.size()), w.count);
  EXPECT_EQ(shadow_count(cube(), w.direction), 6);
}

TEST(ShadowNumberTest, SampledNeverExceedsExact) {
  EXPECT_EQ(shadow_number_sampled(cube(), 10000, 1), 6);
  EXPECT_EQ(shadow_number_sampled(testing::regular_simplex(), 10000, 2), 4);
  std::mt19937_64 g(9);
  for (int t = 0; t < 5; ++t) {
    Polyhedron p = testing::random_polytope(g, 10 + t);
    int exact = shadow_number(p).count;
    EXPECT_LE(shadow_number_sampled(p, 1, t), exact);
    EXPECT_LE(shadow_number_sampled(p, 2000, t), exact);
    EXPECT_GE(exact, 3);
    EXPECT_LE(exact, static_cast<int>(p.vertices().size()));
  }
}

TEST(ShadowProperty, HullOracleAndAntipodes) {
  std::mt19937_64 g(21);
  for (int t = 0; t < 15; ++t) {
    Polyhedron p = testing::random_polytope(g, 8 + t);
    for (int k = 0; k < 10; ++k) {
      Ray u = testing::random_ray(g);
      int c = shadow_count(p, u);
      EXPECT_EQ(c, projected_hull(p, u));
      EXPECT_EQ(c, shadow_count(p, -u));
      EXPECT_EQ(static_cast<int>(shadow_polygon(p, u).cycle.size()), c);
    }
  }
}

TEST(ShadowProperty, RotationInvariance) {
  std::mt19937_64 g(23);
  // Rational rotation from the quaternion (1, 2, 3, 4), scale 30.
  long a = 1, b = 2, c = 3, d = 4;
  std::array<IVec3, 3> m = {
      IVec3(a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)),
      IVec3(2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)),
      IVec3(2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d)};
  for (int t = 0; t < 5; ++t) {
    Polyhedron p = testing::random_polytope(g, 9 + t);
    auto pts = transform_points(p.vertices(), m, BigInt(30), {ExactRatio(1, 3), 5, -2});
    EXPECT_EQ(shadow_number(p).count, shadow_number(Polyhedron::from_vrep(pts)).count);
  }
}

TEST(ShadowProperty, ParallelMatchesSerial) {
  std::mt19937_64 g(29);
  for (int t = 0; t < 5; ++t) {
    Polyhedron p = testing::random_polytope(g, 15);
    DirectionWitness a = shadow_number(p, Exec::kSerial);
    DirectionWitness b = shadow_number(p, Exec::kParallel);
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.direction.str(), b.direction.str());
  }
}

}  // namespace
}  // namespace moser
