#include "moser/exact.h"

#include <gtest/gtest.h>

#include <random>

namespace moser {
namespace {

TEST(ExactRatioTest, ParsesAndCanonicalises) {
  EXPECT_EQ(ExactRatio::parse("6/4").str(), "3/2");
  EXPECT_EQ(ExactRatio::parse("-6/-4").str(), "3/2");
  EXPECT_EQ(ExactRatio::parse("3/-4").str(), "-3/4");
  EXPECT_EQ(ExactRatio::parse("42").str(), "42");
  EXPECT_EQ(ExactRatio::parse("+7/7").str(), "1");
  EXPECT_EQ(ExactRatio::parse(" -0/5 ").str(), "0");
  EXPECT_EQ(ExactRatio::parse("123456789012345678901234567890").str(),
            "123456789012345678901234567890");
}

TEST(ExactRatioTest, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "--1"}) {
    EXPECT_THROW(ExactRatio::parse(bad), Error) << bad;
  }
}

TEST(ExactRatioTest, ArithmeticIsExact) {
  ExactRatio a = ExactRatio::parse("1/3"), b = ExactRatio::parse("1/6");
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_LT(b, a);
  EXPECT_THROW(a / ExactRatio(0), Error);
}

TEST(SignDotTest, Examples) {
  EXPECT_EQ(sign_dot(Ray(1, 0, 0), IVec3(0, 1, 0)), 0);
  EXPECT_EQ(sign_dot(Ray(1, 2, 2), IVec3(1, 1, 1)), 1);
  PerturbedRay p(IVec3(0, 0, 1), IVec3(1, 0, 0), IVec3(0, 1, 0));
  EXPECT_EQ(sign_dot(p, IVec3(1, 0, 0)), 1);
  EXPECT_EQ(sign_dot(p, IVec3(-1, 0, 0)), -1);
  EXPECT_EQ(sign_dot(p, IVec3(0, -1, 0)), -1);
  EXPECT_EQ(sign_dot(p, IVec3(0, 0, -1)), -1);
}

TEST(SignDotTest, ZeroNormalRejected) {
  RVec3 zero{0, 0, 0};
  EXPECT_THROW(sign_dot(Ray(1, 0, 0), zero), Error);
}

TEST(RayTest, CanonicalFormKeepsOrientation) {
  Ray a(IVec3(2, -4, 6)), b(IVec3(-1, 2, -3));
  EXPECT_EQ(a.v(), IVec3(1, -2, 3));
  EXPECT_FALSE(a == b);
  EXPECT_EQ(a.line_key(), b.line_key());
  EXPECT_EQ(Ray(RVec3{ExactRatio(1, 2), ExactRatio(1, 3), 0}).v(), IVec3(3, 2, 0));
  EXPECT_THROW(Ray(0, 0, 0), Error);
}

TEST(Orient2dTest, Examples) {
  EXPECT_EQ(orient2d({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient2d({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orient2d({0, 0}, {0, 1}, {1, 0}), -1);
}

ExactRatio random_ratio(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return ExactRatio(BigInt(num(g)), BigInt(den(g)));
}

TEST(SignDotProperty, ScalingAndAntisymmetry) {
  std::mt19937_64 g(7);
  for (int t = 0; t < 500; ++t) {
    RVec3 d{random_ratio(g), random_ratio(g), random_ratio(g)};
    RVec3 n{random_ratio(g), random_ratio(g), random_ratio(g)};
    if (d.is_zero() || n.is_zero()) continue;
    ExactRatio q = random_ratio(g);
    if (q.is_zero()) continue;
    int base = sign_dot(Ray(d), n);
    EXPECT_EQ(base, dot(d, n).sign());
    EXPECT_EQ(sign_dot(Ray(d * q), n), q.sign() * base);
    EXPECT_EQ(sign_dot(Ray(d), -n), -base);
  }
}

TEST(Orient2dProperty, Alternating) {
  std::mt19937_64 g(11);
  for (int t = 0; t < 500; ++t) {
    RVec2 a{random_ratio(g), random_ratio(g)}, b{random_ratio(g), random_ratio(g)},
        c{random_ratio(g), random_ratio(g)};
    int s = orient2d(a, b, c);
    EXPECT_EQ(orient2d(b, a, c), -s);
    EXPECT_EQ(orient2d(a, c, b), -s);
    EXPECT_EQ(orient2d(b, c, a), s);
  }
}

TEST(HomogeneousTest, RoundTrip) {
  RVec2 p{ExactRatio(3, 4), ExactRatio(-5, 6)};
  IVec3 h = homogenize_point(p);
  EXPECT_EQ(h, IVec3(9, -10, 12));
  EXPECT_EQ(dehomogenize(h), p);
  EXPECT_EQ(homogenize_direction({ExactRatio(2), ExactRatio(-4)}), IVec3(1, -2, 0));
}

}  // namespace
}  // namespace moser
