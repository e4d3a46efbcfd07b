#include "moser/sweep.h"

#include <gtest/gtest.h>

#include "moser/constructions.h"
#include "moser/generators.h"

namespace moser {
namespace {

void expect_valid(const PlanarSubdivision& s, const StabCertificate& c) {
  CertificateCheck chk = check_certificate(s, c);
  EXPECT_TRUE(chk.ok()) << chk.detail;
  EXPECT_TRUE(c.recurrence_ok);
  EXPECT_TRUE(c.pieces_ok);
  EXPECT_TRUE(c.meets_guarantee());
  EXPECT_EQ(c.count, stab_count(s, c.line));
  if (c.kind == StabCertificate::Kind::kHorizontal) {
    EXPECT_GE(c.count, static_cast<int>(c.stages.size()));
  } else {
    EXPECT_GE(c.count, c.k);
  }
  for (size_t i = 0; i + 1 < c.stages.size(); ++i) {
    EXPECT_EQ(c.stages[i].kernel_regions, c.stages[i + 1].regions);
    EXPECT_LT(c.stages[i + 1].regions, c.stages[i].regions);
    if (c.convex_input) EXPECT_LE(c.stages[i].pieces, 3 * c.stages[i].critical - 1);
  }
}

TEST(SweepGuaranteeTest, Values) {
  EXPECT_EQ(sweep_guarantee(1, 5), 1);
  EXPECT_EQ(sweep_guarantee(100, 5), 3);
  EXPECT_EQ(sweep_guarantee(1000, 5), 4);
  EXPECT_EQ(sweep_guarantee(10000, 5), 5);
  EXPECT_EQ(sweep_guarantee(1000000, 5), 5);
  // 16^2 * 5 = 1280 >= 15 * 50 = 750, 16 * 5 < 750.
  EXPECT_EQ(sweep_guarantee(50, 7), 2);
  EXPECT_THROW(sweep_guarantee(10, 4), Error);
}

TEST(SweepTest, Trivial) {
  StabCertificate c = sweep_certificate(trivial_subdivision());
  EXPECT_EQ(c.count, 1);
  EXPECT_EQ(c.kind, StabCertificate::Kind::kHorizontal);
  EXPECT_EQ(c.stages.size(), 1u);
  expect_valid(trivial_subdivision(), c);
}

TEST(SweepTest, Quadrants) {
  PlanarSubdivision q = quadrants();
  StabCertificate c = sweep_certificate(q);
  expect_valid(q, c);
  EXPECT_GE(c.count, 2);
}

TEST(SweepTest, FirstLineSuffices) {
  PlanarSubdivision v = voronoi_subdivision(300, 21);
  StabCertificate c = sweep_certificate(v, 5);
  EXPECT_EQ(c.kind, StabCertificate::Kind::kNonhorizontal);
  EXPECT_EQ(c.stages.size(), 1u);
  EXPECT_EQ(c.guarantee, 3);
  expect_valid(v, c);
}

TEST(SweepTest, ForcedStagesVoronoi) {
  for (uint64_t seed : {1, 2, 3}) {
    PlanarSubdivision v = voronoi_subdivision(400, seed);
    StabCertificate c = sweep_certificate(v, 60);
    EXPECT_GE(c.stages.size(), 2u) << seed;
    expect_valid(v, c);
  }
}

TEST(SweepTest, ForcedStagesArrangement) {
  PlanarSubdivision a = line_arrangement(12, 5);
  StabCertificate c = sweep_certificate(a, 40);
  EXPECT_GE(c.stages.size(), 2u);
  expect_valid(a, c);
}

TEST(SweepTest, ExteriorRegion) {
  RingSubdivision e = gen_ring_subdivision(12);
  StabCertificate c = sweep_certificate(e.subdivision, 5);
  EXPECT_FALSE(c.convex_input);
  expect_valid(e.subdivision, c);
  StabCertificate d = sweep_certificate(e.subdivision, 20);
  expect_valid(e.subdivision, d);
}

TEST(SweepTest, ParallelMatchesSerial) {
  PlanarSubdivision v = voronoi_subdivision(250, 9);
  StabCertificate a = sweep_certificate(v, 40, Exec::kSerial);
  StabCertificate b = sweep_certificate(v, 40, Exec::kParallel);
  EXPECT_EQ(a.line.str(), b.line.str());
  EXPECT_EQ(a.count, b.count);
  ASSERT_EQ(a.stages.size(), b.stages.size());
  for (size_t i = 0; i < a.stages.size(); ++i) {
    EXPECT_EQ(a.stages[i].kernel_regions, b.stages[i].kernel_regions);
  }
}

TEST(SweepTest, RejectsSmallK) {
  EXPECT_THROW(sweep_certificate(quadrants(), 4), Error);
}

}  // namespace
}  // namespace moser
