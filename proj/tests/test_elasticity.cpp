#include <gtest/gtest.h>

#include <random>

#include "nsg/elasticity.hpp"
#include "oracles.hpp"

using nsg::i64;
using nsg::NumericalSemigroup;
using nsg::Rational;

TEST(ElasticityElement, Examples) {
  const auto e = nsg::elasticity_element(NumericalSemigroup{2, 3}, 12);
  EXPECT_EQ(e.numerator, 6);
  EXPECT_EQ(e.denominator, 4);
  EXPECT_EQ(e.value, Rational(3, 2));
  EXPECT_EQ(nsg::elasticity_element(NumericalSemigroup{7, 10, 12}, 42).value, Rational(3, 2));
  EXPECT_EQ(nsg::elasticity_element(NumericalSemigroup{6, 9, 20}, 60).value, Rational(10, 3));
}

TEST(ElasticityElement, Errors) {
  try {
    nsg::elasticity_element(NumericalSemigroup{2, 3}, 0);
    FAIL();
  } catch (const nsg::error& e) {
    EXPECT_EQ(e.code(), nsg::errc::zero_element);
  }
  try {
    nsg::elasticity_element(NumericalSemigroup{2, 3}, 1);
    FAIL();
  } catch (const nsg::error& e) {
    EXPECT_EQ(e.code(), nsg::errc::not_member);
  }
}

TEST(ElasticitySemigroup, Examples) {
  const auto two_three = nsg::elasticity_semigroup(NumericalSemigroup{2, 3});
  EXPECT_EQ(two_three.value, Rational(3, 2));
  EXPECT_EQ(two_three.witness, 6);
  EXPECT_EQ(nsg::elasticity_semigroup(NumericalSemigroup{7, 10, 12}).value, Rational(12, 7));
  EXPECT_EQ(nsg::elasticity_semigroup(NumericalSemigroup{6, 9, 20}).value, Rational(10, 3));
  EXPECT_EQ(nsg::elasticity_semigroup(NumericalSemigroup{1}).value, Rational(1));
}

TEST(ElasticityProfile, TwoThree) {
  const auto profile = nsg::elasticity_profile(NumericalSemigroup{2, 3}, 12);
  const std::vector<Rational> expected{Rational(1),    Rational(1),    Rational(1),    Rational(1),
                                       Rational(3, 2), Rational(1),    Rational(4, 3), Rational(4, 3),
                                       Rational(5, 4), Rational(5, 4), Rational(3, 2)};
  ASSERT_EQ(profile.size(), expected.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    EXPECT_EQ(profile[i].first, static_cast<i64>(i) + 2);
    EXPECT_EQ(profile[i].second, expected[i]) << profile[i].first;
  }
  EXPECT_THROW(nsg::elasticity_profile(NumericalSemigroup{2, 3}, 1), nsg::error);
}

TEST(ElasticityProfile, BoundedAndStepMonotone) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const NumericalSemigroup s(oracle::random_generators(rng, 2 + trial % 3, 20));
    const i64 n1 = s.multiplicity(), nk = s.largest_generator();
    const Rational rho = nsg::elasticity_semigroup(s).value;
    const nsg::LengthExtremes ext(s);
    for (i64 n = 1; n <= 3 * n1 * nk; ++n) {
      if (!s.contains(n)) continue;
      const Rational r = nsg::elasticity_element(ext, n).value;
      EXPECT_LE(r, rho) << nsg::to_string(s) << " n=" << n;
      EXPECT_GE(nsg::elasticity_element(ext, n + n1 * nk).value, r) << nsg::to_string(s) << " n=" << n;
    }
  }
}

TEST(ElasticityProfile, ApproachesSupremumAlongMultiples) {
  // rho(a n1 nk + n1) = (a nk + 1) / (a n1 + 1), strictly increasing in a.
  const NumericalSemigroup s{7, 10, 12};
  const nsg::LengthExtremes ext(s);
  Rational previous(0);
  for (i64 a = 1; a <= 20; ++a) {
    const Rational r = nsg::elasticity_element(ext, a * 84 + 7).value;
    EXPECT_EQ(r, Rational(a * 12 + 1, a * 7 + 1));
    EXPECT_GT(r, previous);
    EXPECT_LT(r, Rational(12, 7));
    previous = r;
  }
}

TEST(ElasticityProfile, TwoThreeMultiplesOfSix) {
  const NumericalSemigroup s{2, 3};
  const nsg::LengthExtremes ext(s);
  for (i64 n = 2; n <= 600; ++n) {
    const Rational r = nsg::elasticity_element(ext, n).value;
    if (n % 6 == 0)
      EXPECT_EQ(r, Rational(3, 2)) << n;
    else
      EXPECT_LT(r, Rational(3, 2)) << n;
  }
}
