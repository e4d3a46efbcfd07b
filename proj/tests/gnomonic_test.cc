#include "moser/gnomonic.h"

#include <gtest/gtest.h>

#include <random>

#include "moser/spherical.h"
#include "test_util.h"

namespace moser {
namespace {

TEST(GnomonicTest, Projection) {
  RVec2 p = gnomonic(Ray(IVec3(3, 4, -5)));
  EXPECT_EQ(p.x, ExactRatio(3, 5));
  EXPECT_EQ(p.y, ExactRatio(4, 5));
  EXPECT_THROW(gnomonic(Ray(IVec3(1, 0, 0))), Error);
  EXPECT_THROW(gnomonic(Ray(IVec3(0, 0, 2))), Error);
  std::mt19937_64 g(1);
  for (int t = 0; t < 50; ++t) {
    Ray r = testing::random_ray(g);
    if (sgn(r[2]) >= 0) continue;
    EXPECT_EQ(gnomonic_inverse(gnomonic(r)), r);
  }
}

TEST(RotationTest, ExactOrthogonal) {
  RationalRotation id;
  EXPECT_TRUE(id.is_orthogonal());
  EXPECT_EQ(id.apply(IVec3(1, 2, 3)), IVec3(1, 2, 3));
  std::mt19937_64 g(2);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int t = 0; t < 30; ++t) {
    RationalRotation r(d(g), d(g), d(g), d(g) + 1000);
    EXPECT_TRUE(r.is_orthogonal());
    // Rotations preserve dot products up to N^2.
    IVec3 a(d(g), d(g), d(g)), b(d(g), d(g), d(g));
    BigInt n = 0;
    for (const BigInt& q : r.quaternion()) n += q * q;
    EXPECT_EQ(dot(r.apply(a), r.apply(b)), dot(a, b) * n * n);
  }
  RationalRotation q = RationalRotation::parse("1,2,3,4");
  EXPECT_EQ(q.str(), "1,2,3,4");
  EXPECT_EQ(q.entry(0, 0), ExactRatio(1 + 4 - 9 - 16, 30));
  EXPECT_THROW(RationalRotation::parse("1,2,3"), Error);
  EXPECT_THROW(RationalRotation(0L, 0L, 0L, 0L), Error);
}

TEST(ProjectTest, CubeImage) {
  SphericalSubdivision img = spherical_image(testing::cube());
  ASSERT_EQ(img.regions.size(), 8u);
  // The identity keeps the four octants with z < 0.
  PlanarSubdivision p = project_subdivision(img, RationalRotation());
  EXPECT_EQ(p.regions.size(), 4u);
  EXPECT_TRUE(p.check_convex());
  EXPECT_TRUE(audit_planar(p, 400, 3).ok());
  EXPECT_EQ(line_span(p).count, 3);
}

TEST(ProjectTest, RotatedImageCoversPlane) {
  std::mt19937_64 g(4);
  Polyhedron poly = testing::random_polytope(g, 12);
  SphericalSubdivision img = spherical_image(poly);
  RationalRotation rot(7, -3, 11, 2);
  PlanarSubdivision p = project_subdivision(img, rot);
  EXPECT_TRUE(p.check_convex());
  EXPECT_TRUE(audit_planar(p, 500, 5).ok());
  // Each planar region is the lower part of one rotated spherical region.
  SphericalSubdivision moved = rotate(img, rot);
  for (const PlanarRegion& r : p.regions) {
    const SphericalPolygon* src = nullptr;
    for (const SphericalPolygon& s : moved.regions)
      if (s.label() == r.label) src = &s;
    ASSERT_NE(src, nullptr);
    for (const IVec3& v : r.cycle) {
      if (sgn(v[2]) == 0) continue;
      EXPECT_TRUE(src->contains(sphere_to_homogeneous(v)));
    }
  }
}

TEST(RotationSearchTest, CoversHalf) {
  std::mt19937_64 g(6);
  SphericalSubdivision img = spherical_image(testing::random_polytope(g, 20));
  RotationSearch r = find_rotation_covering_half(img, 200, 7);
  EXPECT_TRUE(r.met);
  EXPECT_GE(r.k, r.target);
  EXPECT_EQ(r.target, (static_cast<int>(img.regions.size()) + 1) / 2);
  EXPECT_EQ(static_cast<int>(project_subdivision(img, r.rotation).regions.size()), r.k);
  RotationSearch again = find_rotation_covering_half(img, 200, 7);
  EXPECT_EQ(again.rotation.str(), r.rotation.str());
}

}  // namespace
}  // namespace moser
