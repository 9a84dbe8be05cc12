#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nsg/lengths.hpp"
#include "nsg/norms.hpp"
#include "nsg/quasi.hpp"
#include "oracles.hpp"

using nsg::i64;
using nsg::NumericalSemigroup;
using nsg::Rational;
using Sequence = std::vector<std::pair<i64, Rational>>;

namespace {

template <typename F>
Sequence members_sequence(const NumericalSemigroup& s, i64 n_max, F&& value) {
  Sequence out;
  for (i64 n = 1; n <= n_max; ++n)
    if (s.contains(n)) out.emplace_back(n, Rational(value(n)));
  return out;
}

}  // namespace

TEST(QuasiProbe, MaxLengthSevenTenTwelve) {
  const NumericalSemigroup s{7, 10, 12};
  const nsg::LengthExtremes ext(s);
  const auto seq = members_sequence(s, 200, [&](i64 n) { return ext.max_length(n); });
  const auto probe = nsg::quasi_probe(seq, 7, 1, Rational(1, 7));
  EXPECT_TRUE(probe.quasi);
  EXPECT_EQ(probe.period, 7);
  EXPECT_EQ(probe.slope, Rational(1, 7));
  ASSERT_TRUE(probe.residuals[4].has_value());
  EXPECT_EQ(*probe.residuals[4], Rational(-11, 7));
  EXPECT_LE(probe.onset, 26);
  // L(60) = 60/7 - 11/7.
  EXPECT_EQ(Rational(60, 7) + *probe.residuals[4], Rational(7));
}

TEST(QuasiProbe, MinLengthTwoThree) {
  const NumericalSemigroup s{2, 3};
  const nsg::LengthExtremes ext(s);
  const auto seq = members_sequence(s, 120, [&](i64 n) { return ext.min_length(n); });
  const auto probe = nsg::quasi_probe(seq, 3, 1, Rational(1, 3));
  EXPECT_TRUE(probe.quasi);
  EXPECT_EQ(*probe.residuals[0], Rational(0));
  EXPECT_EQ(*probe.residuals[1], Rational(2, 3));
  EXPECT_EQ(*probe.residuals[2], Rational(1, 3));
}

TEST(QuasiProbe, ConstantSequence) {
  Sequence seq;
  for (i64 n = 0; n < 30; ++n) seq.emplace_back(n, Rational(4));
  const auto probe = nsg::quasi_probe(seq, 2, 0);
  EXPECT_TRUE(probe.quasi);
  EXPECT_EQ(probe.onset, 0);
  EXPECT_EQ(*probe.residuals[0], Rational(4));
  EXPECT_EQ(*probe.residuals[1], Rational(4));
}

TEST(QuasiProbe, LateOnset) {
  Sequence seq;
  for (i64 n = 0; n < 40; ++n) seq.emplace_back(n, Rational(n < 10 ? n : 3 + n % 2));
  const auto probe = nsg::quasi_probe(seq, 2, 0);
  EXPECT_EQ(probe.onset, 10);
}

TEST(QuasiProbe, InsufficientData) {
  Sequence seq;
  for (i64 n = 0; n < 10; ++n) seq.emplace_back(n, Rational(n * n));
  try {
    nsg::quasi_probe(seq, 2, 1, Rational(1));
    FAIL();
  } catch (const nsg::error& e) {
    EXPECT_EQ(e.code(), nsg::errc::insufficient_data);
  }
  EXPECT_THROW(nsg::quasi_probe({}, 2, 0), nsg::error);
  EXPECT_THROW(nsg::quasi_probe(seq, 0, 0), nsg::error);
  EXPECT_THROW(nsg::quasi_probe(seq, 2, 2), nsg::error);
}

TEST(QuasiProbe, MinMaxNormEventuallyQuasilinear) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const NumericalSemigroup s(oracle::random_generators(rng, 2 + trial % 2, 10));
    const auto& g = s.generators();
    const i64 sum = std::accumulate(g.begin(), g.end(), i64{0});
    const i64 bound = 40 * sum * s.largest_generator();
    const auto values = nsg::min_max_norm_sequence(s, bound);
    Sequence seq;
    for (i64 n = 1; n <= bound; ++n)
      if (values[static_cast<std::size_t>(n)] >= 0) seq.emplace_back(n, Rational(values[static_cast<std::size_t>(n)]));
    const auto probe = nsg::quasi_probe(seq, sum, 1, Rational(1, sum));
    EXPECT_TRUE(probe.quasi) << nsg::to_string(s);
  }
}
