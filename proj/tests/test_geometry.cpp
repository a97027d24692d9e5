#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "superrad/errors.hpp"
#include "superrad/geometry.hpp"

using namespace superrad;

namespace {
// 30-digit mpmath evaluations at M = double(2.001), Q = 2. M^2 - Q^2 is
// tiny, so the decimal 2.001 would shift r+ - r- in the 14th digit.
constexpr double kRPlus = 2.06425345840347;
constexpr double kRMinus = 1.9377465415965296;
constexpr double kGap = 0.1265069168069408;
constexpr double kKappaPlus = 0.02968849822350348;
constexpr double kKappaMinus = -0.03369149872350304;
}  // namespace

TEST(Geometry, Horizons) {
  const BlackHole bh(2.001, 2.0);
  EXPECT_NEAR(bh.r_plus(), kRPlus, 1e-14);
  EXPECT_NEAR(bh.r_minus(), kRMinus, 1e-14);
  EXPECT_NEAR(bh.horizon_gap(), kGap, 1e-16);
  EXPECT_NEAR(bh.kappa_plus(), kKappaPlus, 1e-15);
  EXPECT_NEAR(bh.kappa_minus(), kKappaMinus, 1e-15);
}

TEST(Geometry, MetricFunction) {
  const BlackHole bh(2.001, 2.0);
  EXPECT_NEAR(metric_f(bh, 3.0), 0.11044444444444444, 1e-15);
  EXPECT_NEAR(metric_f(bh, bh.r_plus() * (1 + 1e-12)), 0.0, 1e-12);
  // F' by central difference
  const double r = 5.0, e = 1e-5;
  EXPECT_NEAR(metric_f_prime(bh, r), (metric_f(bh, r + e) - metric_f(bh, r - e)) / (2 * e), 1e-9);
  EXPECT_THROW(metric_f(bh, 2.0), std::domain_error);
}

TEST(Geometry, TortoiseValue) {
  const BlackHole bh(2.001, 2.0);
  EXPECT_NEAR(tortoise(bh, 10.0), 17.820226312294437, 1e-12);
  const BlackHole shifted(2.001, 2.0, 3.5);
  EXPECT_NEAR(tortoise(shifted, 10.0), 17.820226312294437 + 3.5, 1e-12);
}

TEST(Geometry, RejectsBadParameters) {
  EXPECT_THROW(BlackHole(1.0, 1.0), ValidationError);
  EXPECT_THROW(BlackHole(1.0, 2.0), ValidationError);
  EXPECT_THROW(BlackHole(1.0, 0.0), ValidationError);
  EXPECT_THROW(BlackHole(-1.0, 0.5), ValidationError);
}

TEST(Geometry, TortoiseRoundTrip) {
  const BlackHole bh(2.001, 2.0);
  for (double x = -150.0; x <= 1000.0; x += 3.7) {
    const RadialSample s = radius_from_tortoise(bh, x);
    ASSERT_FALSE(s.horizon_limit) << x;
    EXPECT_NEAR(tortoise(bh, s.r), x, 1e-10 * std::max(1.0, std::abs(x))) << x;
  }
}

TEST(Geometry, NearHorizonAsymptote) {
  // r - r+ ~ (r+ - r-)^(r-^2/r+^2) e^{-kappa+ (r+ + R0)} e^{kappa+ x}
  const BlackHole bh(2.001, 2.0);
  // The relative correction is O(r - r+), i.e. O(e^{kappa+ x}).
  auto ratio = [&](double x) {
    const double predicted = std::pow(bh.horizon_gap(), kRMinus * kRMinus / (kRPlus * kRPlus)) *
                             std::exp(-kKappaPlus * kRPlus) * std::exp(kKappaPlus * x);
    return radius_from_tortoise(bh, x).horizon_offset / predicted;
  };
  EXPECT_NEAR(ratio(-200.0), 1.0, 5e-3);
  EXPECT_NEAR(ratio(-600.0), 1.0, 1e-7);
  EXPECT_LT(std::abs(ratio(-400.0) - 1.0), std::abs(ratio(-200.0) - 1.0));
}

TEST(Geometry, DeepHorizonLimit) {
  const BlackHole bh(2.001, 2.0);
  const RadialSample s = radius_from_tortoise(bh, -1e6);
  EXPECT_TRUE(s.horizon_limit);
  EXPECT_DOUBLE_EQ(s.r, bh.r_plus());
  EXPECT_EQ(metric_f(bh, s), 0.0);
}

TEST(Geometry, MonotoneInverse) {
  const BlackHole bh(1.0, 0.5);
  double previous = 0.0;
  for (double x = -50.0; x <= 50.0; x += 0.5) {
    const double r = radius_from_tortoise(bh, x).r;
    EXPECT_GT(r, previous);
    previous = r;
  }
}
