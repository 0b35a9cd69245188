#include <gtest/gtest.h>

#include <cmath>

#include "specopt/rng.hpp"
#include "specopt/scalar.hpp"
#include "support/oracles.hpp"

namespace specopt {
namespace {

using testing::kAfun21;

TEST(ExtendedReal, RejectsNaN) {
  EXPECT_THROW(ExtendedReal(std::nan("")), std::invalid_argument);
}

TEST(ExtendedReal, OrdersInfinitiesAroundFinite) {
  const ExtendedReal big(1e300);
  EXPECT_LT(big, ExtendedReal::pos_inf());
  EXPECT_GT(ExtendedReal(-1e300), ExtendedReal::neg_inf());
  EXPECT_EQ(-ExtendedReal::pos_inf(), ExtendedReal::neg_inf());
  EXPECT_EQ(ExtendedReal(HUGE_VAL), ExtendedReal::pos_inf());
}

TEST(ExtendedReal, PromotesAtThreshold) {
  EXPECT_TRUE(ExtendedReal::promoted(1e12).is_pos_inf());
  EXPECT_TRUE(ExtendedReal::promoted(-2e12).is_neg_inf());
  EXPECT_TRUE(ExtendedReal::promoted(9.99e11).is_finite());
}

TEST(Afun, ExampleTable) {
  EXPECT_NEAR(afun(3.0, 3.0), 3.0, 1e-12);
  EXPECT_EQ(afun(1.0, -1.0), 0.0);
  EXPECT_NEAR(afun(2.0, 1.0), kAfun21, 1e-12);
  EXPECT_NEAR(afun(0.0, HUGE_VAL), 1.0, 1e-12);
  EXPECT_EQ(afun(HUGE_VAL, -HUGE_VAL), 0.0);
}

TEST(Afun, ExtensionClauses) {
  const auto inf = ExtendedReal::pos_inf();
  const auto ninf = ExtendedReal::neg_inf();
  EXPECT_TRUE(afun(inf, inf).is_pos_inf());
  EXPECT_TRUE(afun(ninf, ninf).is_neg_inf());
  EXPECT_EQ(afun(ninf, inf).finite_value(), 0.0);
  // a - sqrt(1 + a^2) at a = 3 and the mirrored clause.
  EXPECT_NEAR(afun(ExtendedReal(3.0), ninf).finite_value(), 3.0 - std::sqrt(10.0), 1e-15);
  EXPECT_NEAR(afun(inf, ExtendedReal(-2.0)).finite_value(), -2.0 + std::sqrt(5.0), 1e-15);
  // Large negative a toward +inf: a + sqrt(1 + a^2) ~ 1/(2|a|).
  EXPECT_NEAR(afun(-1e8, HUGE_VAL), 0.5e-8, 1e-22);
}

TEST(Afun, RejectsNaN) {
  EXPECT_THROW(afun(std::nan(""), 1.0), std::invalid_argument);
  EXPECT_THROW(afun_tan_form(1.0, std::nan("")), std::invalid_argument);
}

TEST(Afun, TanFormExamples) {
  EXPECT_EQ(afun_tan_form(0.0, 0.0), 0.0);
  EXPECT_NEAR(afun_tan_form(1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(afun_tan_form(2.0, 1.0), kAfun21, 1e-12);
}

TEST(Afun, MatchesLongDoubleReference) {
  // Frozen from a 30-digit evaluation.
  EXPECT_NEAR(afun(0.7, -3.2), -0.340953267506436788443613454516, 1e-15);
  EXPECT_NEAR(afun(5.0, 1e-3), 0.8206402845634681562287799531, 1e-15);
  EXPECT_NEAR(afun(-4.0, -9.0), -5.5643314927068414368662748557, 1e-14);
  CounterRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double a = 20 * (rng.uniform01() - 0.5);
    const double b = 20 * (rng.uniform01() - 0.5);
    const double ref = static_cast<double>(testing::afun_reference(a, b));
    EXPECT_NEAR(afun(a, b), ref, 1e-13 * (1 + std::fabs(ref))) << a << " " << b;
  }
}

TEST(Afun, NearRemovableSingularity) {
  // a + b -> 0 stays continuous and tends to 0.
  for (double eps : {1e-3, 1e-8, 1e-12, 1e-15}) {
    const double a = 7.0;
    const double v = afun(a, -a + eps);
    const double ref = static_cast<double>(testing::afun_reference(a, -a + eps));
    EXPECT_NEAR(v, ref, 1e-15) << eps;
  }
  EXPECT_NEAR(afun(1e-9, 1e-9), 1e-9, 1e-24);
}

TEST(Afun, PropertiesOverRandomPairs) {
  CounterRng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const double a = std::ldexp(rng.uniform01() - 0.5, static_cast<int>(rng.uniform_index(80)) - 40);
    const double b = std::ldexp(rng.uniform01() - 0.5, static_cast<int>(rng.uniform_index(80)) - 40);
    const double v = afun(a, b);
    ASSERT_EQ(v, afun(b, a));
    ASSERT_LE(std::min(a, b), v);
    ASSERT_GE(std::max(a, b), v);
    ASSERT_LE(std::fabs(v), std::fabs(a + b) / 2 + 1e-12);
  }
}

TEST(Bfun, ExampleTable) {
  EXPECT_NEAR(bfun(1, 1, 2), 0.5, 1e-15);
  EXPECT_EQ(bfun(1, -1, 5), 0.0);
  EXPECT_NEAR(bfun(2, 1, 1), kAfun21, 1e-12);
}

TEST(Bfun, RejectsNonPositiveScale) {
  EXPECT_THROW(bfun(1, 1, 0), std::invalid_argument);
  EXPECT_THROW(bfun(1, 1, -1), std::invalid_argument);
  EXPECT_THROW(bfun(1, 1, std::nan("")), std::invalid_argument);
}

TEST(Bfun, OppositeSignsWithoutCancellation) {
  // a/c and b/c near -1 and 1 + tiny: the rationalized numerator keeps accuracy.
  const double c = 1e-6;
  const double a = -1e3;
  const double b = 1e3 + 1e-6;
  const double ref = static_cast<double>(testing::afun_reference(a / c, b / c));
  EXPECT_NEAR(bfun(a, b, c), ref, 1e-12);
}

double log_uniform_signed(CounterRng& rng, double lo_exp, double hi_exp) {
  const double mag = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * rng.uniform01());
  return rng.uniform01() < 0.5 ? -mag : mag;
}

TEST(Afun, AgreesWithTanFormLogUniform) {
  CounterRng rng(13);
  for (int i = 0; i < 20000; ++i) {
    const double a = log_uniform_signed(rng, -6, 6);
    const double b = log_uniform_signed(rng, -6, 6);
    const double v = afun(a, b);
    ASSERT_LE(std::fabs(v - afun_tan_form(a, b)), 1e-9 * (1 + std::fabs(v))) << a << " " << b;
  }
}

TEST(Bfun, MatchesScaledAfun) {
  CounterRng rng(17);
  for (int i = 0; i < 20000; ++i) {
    const double a = log_uniform_signed(rng, -6, 6);
    const double b = log_uniform_signed(rng, -6, 6);
    const double c = std::pow(10.0, -6 + 12 * rng.uniform01());
    const double v = bfun(a, b, c);
    ASSERT_LE(std::fabs(v - afun(a / c, b / c)), 1e-9 * (1 + std::fabs(v))) << a << " " << b << " " << c;
  }
}

}  // namespace
}  // namespace specopt
