#include "moser/polyhedron.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.h"

namespace moser {
namespace {

using testing::cube;
using testing::cube_points;
using testing::orthant;
using testing::simplex;

void expect_sizes(const Polyhedron& p, int v, int e, int f, bool bounded) {
  SizeMeasures s = p.size_measures();
  EXPECT_EQ(s.v, v);
  EXPECT_EQ(s.e, e);
  EXPECT_EQ(s.f, f);
  EXPECT_EQ(s.bounded, bounded);
  EXPECT_TRUE(p.check_euler());
  EXPECT_TRUE(p.check_size_bounds());
}

TEST(FromVrepTest, Cube) { expect_sizes(cube(), 8, 12, 6, true); }

TEST(FromVrepTest, Simplex) { expect_sizes(simplex(), 4, 6, 4, true); }

TEST(FromVrepTest, DiscardsInteriorPoint) {
  auto pts = cube_points();
  pts.push_back({ExactRatio(1, 2), ExactRatio(1, 2), ExactRatio(1, 2)});
  pts.push_back({ExactRatio(1, 2), 0, 0});  // on an edge
  pts.push_back({ExactRatio(1, 2), ExactRatio(1, 2), 0});  // on a face
  expect_sizes(Polyhedron::from_vrep(pts), 8, 12, 6, true);
}

TEST(FromVrepTest, DimensionError) {
  try {
    Polyhedron::from_vrep({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimension);
    EXPECT_NE(std::string(e.what()).find("rank 2"), std::string::npos);
  }
}

TEST(FromHrepTest, Orthant) {
  Polyhedron p = orthant();
  expect_sizes(p, 1, 3, 3, false);
  std::set<Ray> rays(p.rays().begin(), p.rays().end());
  EXPECT_EQ(rays, (std::set<Ray>{Ray(1, 0, 0), Ray(0, 1, 0), Ray(0, 0, 1)}));
  for (const Face& f : p.faces()) {
    EXPECT_FALSE(f.bounded());
    EXPECT_EQ(f.cycle.size(), 1u);
  }
}

std::vector<HalfSpace> cube_halfspaces() {
  return {{{1, 0, 0}, 1}, {{-1, 0, 0}, 0}, {{0, 1, 0}, 1},
          {{0, -1, 0}, 0}, {{0, 0, 1}, 1}, {{0, 0, -1}, 0}};
}

TEST(FromHrepTest, CubeAndRedundancy) {
  expect_sizes(Polyhedron::from_hrep(cube_halfspaces()), 8, 12, 6, true);
  auto hs = cube_halfspaces();
  hs.push_back({{1, 0, 0}, 2});
  hs.push_back({{2, 0, 0}, 2});      // duplicate of x <= 1 after scaling
  hs.push_back({{1, 1, 0}, 2});      // touches along an edge
  hs.push_back({{1, 1, 1}, 3});      // touches at a vertex
  expect_sizes(Polyhedron::from_hrep(hs), 8, 12, 6, true);
}

TEST(FromHrepTest, Errors) {
  auto expect_kind = [](const std::vector<HalfSpace>& hs, ErrorKind k) {
    try {
      Polyhedron::from_hrep(hs);
      FAIL() << "expected error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k) << e.what();
    }
  };
  // Empty.
  expect_kind({{{1, 0, 0}, 0}, {{-1, 0, 0}, -1}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}},
              ErrorKind::kInfeasible);
  // Flat: x = 0 slab of zero width.
  auto flat = cube_halfspaces();
  flat[0] = {{1, 0, 0}, 0};
  expect_kind(flat, ErrorKind::kInfeasible);
  // Contains a line (infinite prism along z).
  expect_kind({{{1, 0, 0}, 1}, {{-1, 0, 0}, 0}, {{0, 1, 0}, 1}, {{0, -1, 0}, 0}},
              ErrorKind::kUnsupportedShape);
  expect_kind({{{1, 0, 0}, 1}}, ErrorKind::kUnsupportedShape);
  expect_kind({{{0, 0, 0}, 1}}, ErrorKind::kInvalidArgument);
}

TEST(FaceLatticeTest, FaceCyclesAreCounterClockwiseFromOutside) {
  std::mt19937_64 g(3);
  for (int t = 0; t < 10; ++t) {
    Polyhedron p = testing::random_polytope(g, 12);
    for (const Face& f : p.faces()) {
      ASSERT_GE(f.cycle.size(), 3u);
      for (size_t i = 0; i < f.cycle.size(); ++i) {
        const RVec3& a = p.vertices()[f.cycle[i]];
        const RVec3& b = p.vertices()[f.cycle[(i + 1) % f.cycle.size()]];
        const RVec3& c = p.vertices()[f.cycle[(i + 2) % f.cycle.size()]];
        EXPECT_GT(dot(cross(b - a, c - b), f.normal.v().to_rvec()).sign(), 0);
      }
    }
  }
}

TEST(FaceLatticeTest, EveryEdgeHasTwoFacesContainingIt) {
  Polyhedron p = orthant();
  for (const Edge& e : p.edges()) {
    EXPECT_NE(e.f0, e.f1);
    for (int f : {e.f0, e.f1}) {
      EXPECT_EQ(dot(p.faces()[f].row, e.direction.v()), 0);
    }
  }
}

TEST(FaceLatticeTest, VertexTightOnThreeIndependentNormals) {
  std::mt19937_64 g(5);
  Polyhedron p = testing::random_polytope(g, 20);
  for (size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& fs = p.vertex_faces(static_cast<int>(i));
    ASSERT_GE(fs.size(), 3u);
    bool independent = false;
    for (size_t a = 0; a < fs.size() && !independent; ++a)
      for (size_t b = a + 1; b < fs.size() && !independent; ++b)
        for (size_t c = b + 1; c < fs.size() && !independent; ++c)
          independent = sgn(det3(p.faces()[fs[a]].row, p.faces()[fs[b]].row,
                                 p.faces()[fs[c]].row)) != 0;
    EXPECT_TRUE(independent);
    for (const Face& f : p.faces()) {
      EXPECT_LE(dot(f.normal.v().to_rvec(), p.vertices()[i]), f.offset);
    }
  }
}

TEST(FaceLatticeTest, VertexFaceCycleOrientation) {
  Polyhedron p = cube();
  for (int v = 0; v < 8; ++v) {
    std::vector<int> cyc = p.vertex_face_cycle(v);
    ASSERT_EQ(cyc.size(), 3u);
    IVec3 sum;
    for (int f : cyc) sum = sum + p.faces()[f].normal.v();
    EXPECT_GT(sgn(det3(p.faces()[cyc[0]].normal.v(), p.faces()[cyc[1]].normal.v(), sum)), 0);
  }
}

TEST(RoundTripProperty, HrepOfVrepIsIsomorphic) {
  std::mt19937_64 g(17);
  for (int t = 0; t < 20; ++t) {
    auto pts = testing::random_points(g, 8 + t);
    Polyhedron a = Polyhedron::from_vrep(pts);
    Polyhedron b = Polyhedron::from_hrep(a.facet_halfspaces());
    SizeMeasures sa = a.size_measures(), sb = b.size_measures();
    EXPECT_EQ(sa.v, sb.v);
    EXPECT_EQ(sa.e, sb.e);
    EXPECT_EQ(sa.f, sb.f);
    std::set<RVec3> va(a.vertices().begin(), a.vertices().end());
    std::set<RVec3> vb(b.vertices().begin(), b.vertices().end());
    EXPECT_EQ(va, vb);
    // Same vertex-facet incidence up to relabelling.
    std::multiset<std::set<RVec3>> fa, fb;
    for (const Face& f : a.faces()) {
      std::set<RVec3> s;
      for (int v : f.cycle) s.insert(a.vertices()[v]);
      fa.insert(s);
    }
    for (const Face& f : b.faces()) {
      std::set<RVec3> s;
      for (int v : f.cycle) s.insert(b.vertices()[v]);
      fb.insert(s);
    }
    EXPECT_EQ(fa, fb);
    EXPECT_TRUE(a.check_euler());
    EXPECT_TRUE(a.check_size_bounds());
  }
}

TEST(UnboundedTest, TruncatedCone) {
  // Orthant cut by x + y + z >= 1: three vertices, a triangle face.
  auto hs = std::vector<HalfSpace>{{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0},
                                   {{-1, -1, -1}, -1}};
  Polyhedron p = Polyhedron::from_hrep(hs);
  expect_sizes(p, 3, 6, 4, false);
  EXPECT_EQ(p.rays().size(), 3u);
  int bounded_faces = 0;
  for (const Face& f : p.faces()) bounded_faces += f.bounded();
  EXPECT_EQ(bounded_faces, 1);
}

}  // namespace
}  // namespace moser
