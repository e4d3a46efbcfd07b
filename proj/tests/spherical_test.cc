#include "moser/spherical.h"

#include <gtest/gtest.h>

#include <set>

#include "moser/shadow.h"
#include "test_util.h"

namespace moser {
namespace {

using testing::cube;
using testing::orthant;

// Octant (s1, s2, s3) meets C_u iff the products s_i * u_i are not all of
// one sign.
int octant_oracle(const IVec3& u) {
  int count = 0;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      for (int s3 : {-1, 1}) {
        int a = s1 * sgn(u[0]), b = s2 * sgn(u[1]), c = s3 * sgn(u[2]);
        bool pos = a > 0 || b > 0 || c > 0, neg = a < 0 || b < 0 || c < 0;
        count += pos && neg;
      }
  return count;
}

TEST(SphericalImageTest, CubeIsEightOctants) {
  SphericalSubdivision d = spherical_image(cube());
  EXPECT_EQ(d.kind, SphericalSubdivision::Kind::kFull);
  ASSERT_EQ(d.regions.size(), 8u);
  std::set<std::vector<int>> signs;
  for (const SphericalPolygon& r : d.regions) {
    EXPECT_EQ(r.cycle().size(), 3u);
    EXPECT_TRUE(r.is_convex());
    IVec3 c;
    for (const Ray& v : r.cycle()) c = c + v.v();
    signs.insert({sgn(c[0]), sgn(c[1]), sgn(c[2])});
    EXPECT_TRUE(r.contains_open(c));
  }
  EXPECT_EQ(signs.size(), 8u);
}

TEST(SphericalImageTest, OrthantImageIsNegativeOctant) {
  SphericalSubdivision d = spherical_image(orthant());
  EXPECT_EQ(d.kind, SphericalSubdivision::Kind::kPartial);
  ASSERT_EQ(d.regions.size(), 1u);
  std::set<Ray> v(d.regions[0].cycle().begin(), d.regions[0].cycle().end());
  EXPECT_EQ(v, (std::set<Ray>{Ray(-1, 0, 0), Ray(0, -1, 0), Ray(0, 0, -1)}));
  ASSERT_TRUE(d.support.has_value());
  std::set<Ray> s(d.support->cycle().begin(), d.support->cycle().end());
  EXPECT_EQ(s, v);
  EXPECT_TRUE(d.regions[0].contains_open(IVec3(-1, -1, -1)));
  EXPECT_FALSE(d.regions[0].contains(IVec3(1, -1, -1)));
}

TEST(SupportOfConeTest, Examples) {
  SphericalPolygon sq = support_of_cone({Ray(1, 1, -2), Ray(-1, 1, -2), Ray(1, -1, -2),
                                         Ray(-1, -1, -2)});
  ASSERT_EQ(sq.cycle().size(), 4u);
  EXPECT_TRUE(sq.is_convex());
  EXPECT_TRUE(sq.contains_open(IVec3(0, 0, 1)));
  for (const Ray& y : sq.cycle()) {
    EXPECT_GT(sgn(y[2]), 0);
    for (const IVec3& d : {IVec3(1, 1, -2), IVec3(-1, 1, -2), IVec3(1, -1, -2), IVec3(-1, -1, -2)}) {
      EXPECT_LE(sgn(dot(y.v(), d)), 0);
    }
  }
  auto kind = [](const std::vector<Ray>& g) {
    try {
      support_of_cone(g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  EXPECT_EQ(kind({Ray(0, 0, -1)}), ErrorKind::kUnsupportedShape);
  EXPECT_EQ(kind({Ray(1, 0, 0), Ray(-1, 0, 0), Ray(0, 1, 0), Ray(0, 0, 1)}),
            ErrorKind::kUnsupportedShape);
}

TEST(CircleSpanTest, CubeImage) {
  SphericalSubdivision d = spherical_image(cube());
  EXPECT_EQ(circle_span(d, Ray(1, 2, 3)), 6);
  std::mt19937_64 g(4);
  for (int t = 0; t < 200; ++t) {
    Ray u = testing::random_ray(g);
    EXPECT_EQ(circle_span(d, u), octant_oracle(u.v()));
  }
  EXPECT_EQ(great_circle_span(d).count, 6);
}

TEST(CircleSpanTest, OneRegionAndHemispheres) {
  SphericalSubdivision d = spherical_image(orthant());
  // Circle far from the region.
  EXPECT_EQ(circle_span(d, Ray(1, 1, 1)), 0);
  EXPECT_EQ(circle_span(d, Ray(1, -1, 0)), 1);

  std::vector<Ray> eq = {Ray(1, 0, 0), Ray(0, 1, 0), Ray(-1, 0, 0), Ray(0, -1, 0)};
  SphericalSubdivision h;
  h.regions.push_back(SphericalPolygon::from_cycle(eq, "north", Ray(0, 0, 1)));
  h.regions.push_back(SphericalPolygon::from_cycle(eq, "south", Ray(0, 0, -1)));
  EXPECT_EQ(great_circle_span(h).count, 2);
  EXPECT_TRUE(audit_coverage(h, 200, 1).ok());
}

TEST(SphericalProperty, IncidenceReversal) {
  std::mt19937_64 g(8);
  for (int t = 0; t < 10; ++t) {
    Polyhedron p = testing::random_polytope(g, 8 + t);
    SphericalSubdivision d = spherical_image(p);
    EXPECT_EQ(d.regions.size(), p.vertices().size());
    EXPECT_EQ(d.vertices().size(), p.faces().size());
    EXPECT_EQ(d.edges().size(), p.edges().size());
    for (const SphericalPolygon& r : d.regions) EXPECT_TRUE(r.is_convex());
  }
  SphericalSubdivision o = spherical_image(orthant());
  EXPECT_EQ(o.vertices().size(), 3u);
  EXPECT_EQ(o.edges().size(), 3u);
}

TEST(SphericalProperty, CoverageAudit) {
  std::mt19937_64 g(10);
  for (int t = 0; t < 5; ++t) {
    SphericalSubdivision d = spherical_image(testing::random_polytope(g, 10));
    CoverageAudit a = audit_coverage(d, 1000, t);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.samples, 1000);
  }
  Polyhedron cut = Polyhedron::from_hrep(
      {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{-1, -1, -2}, -1}});
  SphericalSubdivision d = spherical_image(cut);
  CoverageAudit a = audit_coverage(d, 1000, 3);
  EXPECT_TRUE(a.ok());
  EXPECT_GT(a.outside_support, 0);
  for (const SphericalPolygon& r : d.regions) {
    for (const IVec3& gv : r.generators()) EXPECT_TRUE(d.support->contains(gv));
  }
}

TEST(SphericalProperty, ShadowNumberEqualsGreatCircleSpan) {
  std::mt19937_64 g(12);
  for (int t = 0; t < 10; ++t) {
    Polyhedron p = testing::random_polytope(g, 8 + 2 * t);
    EXPECT_EQ(shadow_number(p).count, great_circle_span(spherical_image(p)).count);
  }
}

TEST(SphericalProperty, CompletedEdgeCrossings) {
  std::mt19937_64 g(14);
  Polyhedron p = testing::random_polytope(g, 12);
  SphericalSubdivision d = spherical_image(p);
  for (int t = 0; t < 50; ++t) {
    Ray u = testing::random_ray(g);
    EXPECT_EQ(completed_edge_crossings(d, u), circle_span(d, u));
    EXPECT_EQ(circle_span(d, u), shadow_count(p, u));
  }
  Polyhedron cut = Polyhedron::from_hrep(
      {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{-1, -1, -2}, -1}});
  SphericalSubdivision dc = spherical_image(cut);
  for (int t = 0; t < 100; ++t) {
    Ray u = testing::random_ray(g);
    bool through_vertex = false;
    for (const Ray& v : dc.vertices()) through_vertex |= sgn(dot(u.v(), v.v())) == 0;
    if (through_vertex) continue;
    int c = circle_span(dc, u);
    EXPECT_EQ(completed_edge_crossings(dc, u), c == 0 ? 0 : c + 1);
  }
}

TEST(SphericalProperty, ParallelMatchesSerial) {
  std::mt19937_64 g(16);
  SphericalSubdivision d = spherical_image(testing::random_polytope(g, 14));
  CircleSpanResult a = great_circle_span(d, Exec::kSerial);
  CircleSpanResult b = great_circle_span(d, Exec::kParallel);
  EXPECT_EQ(a.count, b.count);
  EXPECT_EQ(a.witness.str(), b.witness.str());
}

TEST(SortAroundTest, OrdersCounterClockwise) {
  std::vector<IVec3> v = {IVec3(0, -1, 5), IVec3(1, 0, 5), IVec3(-1, 0, 5), IVec3(0, 1, 5)};
  std::vector<IVec3> s = sort_around(IVec3(0, 0, 1), v);
  for (size_t i = 0; i < s.size(); ++i) {
    EXPECT_GT(sgn(det3(IVec3(0, 0, 1), s[i], s[(i + 1) % s.size()])), 0);
  }
}

}  // namespace
}  // namespace moser
