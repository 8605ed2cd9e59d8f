#include "cyclopadic/cycle_index.hpp"
#include "cyclopadic/series.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cyclopadic;

using Series = TruncatedSeries<Rational>;

TEST(Series, ExpOfZeroIsOne) {
  const Series e = series_exp(Series(6));
  EXPECT_EQ(e, Series::constant(6, 1));
}

TEST(Series, ArctanCoefficients) {
  const Series a = series_arctan(Series::t(5));
  EXPECT_EQ(a, Series(5, {0, 1, 0, Rational(-1, 3), 0, Rational(1, 5)}));
}

TEST(Series, ExpAgreesWithPowerSum) {
  // exp(t + t^2/3 - 2t^5) two ways
  Series s(10);
  s[1] = 1;
  s[2] = Rational(1, 3);
  s[5] = -2;
  EXPECT_EQ(series_exp(s), oracle::exp_by_power_sum(s));
  EXPECT_EQ(series_exp(series_arctan(Series::t(12))), oracle::exp_by_power_sum(series_arctan(Series::t(12))));
}

TEST(Series, InvSqrtSquaresToInverse) {
  Series one_plus_t2 = Series::constant(12, 1);
  one_plus_t2[2] = 1;
  const Series g = series_inv_sqrt(one_plus_t2);
  // g^2 (1 + t^2) = 1
  EXPECT_EQ(series_mul(series_mul(g, g), one_plus_t2), Series::constant(12, 1));
  EXPECT_EQ(g[2], Rational(-1, 2));
  EXPECT_EQ(g[4], Rational(3, 8));
}

TEST(Series, PreconditionsEnforced) {
  EXPECT_THROW(series_exp(Series::constant(3, 1)), std::invalid_argument);
  EXPECT_THROW(series_arctan(Series::constant(3, 1)), std::invalid_argument);
  EXPECT_THROW(series_inv_sqrt(Series::constant(3, 2)), std::invalid_argument);
}

TEST(Series, TruncationPropagatesToSmallerOrder) {
  EXPECT_EQ(series_mul(Series::t(8), Series::t(3)).order(), 3u);
  EXPECT_EQ((Series::t(8) + Series::t(4)).order(), 4u);
}

TEST(Series, ExpOfXArctanGivesQstar3) {
  const auto xs = series_arctan(Series::t(3)).map([](const Rational& c) { return RationalUniPoly::monomial(1, c); });
  const RationalUniPoly q3 = egf_coefficient(series_exp(xs), 3);
  EXPECT_EQ(q3, RationalUniPoly({Rational(0), Rational(-2), Rational(0), Rational(1)}));
}

TEST(Series, CycleIndexEgfMatchesExponentialProduct) {
  for (std::size_t n = 0; n <= 12; ++n) {
    const RationalMultiPoly expected = oracle::cycle_index_by_exponential_product(n);
    EXPECT_EQ(to_rational(cycle_indicator(n)), expected) << n;
    EXPECT_EQ(to_rational(cycle_indicator_via_egf(n)), expected) << n;
  }
}
