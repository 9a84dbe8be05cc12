#include <gtest/gtest.h>

#include <random>

#include "golden.hpp"
#include "nsg/lengths.hpp"
#include "oracles.hpp"

using nsg::i64;
using nsg::NumericalSemigroup;
using Vec = std::vector<i64>;

TEST(LengthSet, Examples) {
  const NumericalSemigroup mcn{6, 9, 20};
  const auto l60 = nsg::length_set(mcn, 60);
  EXPECT_EQ(l60.lengths, (Vec{3, 7, 8, 9, 10}));
  EXPECT_EQ(l60.min_len, 3);
  EXPECT_EQ(l60.max_len, 10);
  EXPECT_EQ(l60.delta, (Vec{1, 4}));
  EXPECT_EQ(nsg::length_set(mcn, 150).lengths, (Vec{10, 11, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25}));
  EXPECT_EQ(nsg::length_set(NumericalSemigroup{7, 10, 12}, 42).lengths, (Vec{4, 6}));
  EXPECT_EQ(nsg::length_set(NumericalSemigroup{2, 3}, 12).lengths, (Vec{4, 5, 6}));
  EXPECT_EQ(nsg::length_set(NumericalSemigroup{7, 10, 12}, 60).max_len, 7);
  EXPECT_EQ(nsg::length_set(mcn, 0).lengths, (Vec{0}));
  EXPECT_THROW(nsg::length_set(mcn, 43), nsg::error);
}

TEST(LengthSet, GoldenTables) {
  const NumericalSemigroup two_three{2, 3};
  for (const auto& row : golden::kTwoThree) EXPECT_EQ(nsg::length_set(two_three, row.n).lengths, row.lengths) << row.n;
  const NumericalSemigroup s{7, 10, 12};
  for (const auto& row : golden::kSevenTenTwelve) EXPECT_EQ(nsg::length_set(s, row.n).lengths, row.lengths) << row.n;
}

TEST(LengthSet, MaxLengthList) {
  const NumericalSemigroup s{7, 10, 12};
  const nsg::LengthExtremes ext(s);
  Vec members, maxima;
  for (i64 n = 1; n <= 60; ++n)
    if (s.contains(n)) {
      members.push_back(n);
      maxima.push_back(ext.max_length(n));
    }
  EXPECT_EQ(members, golden::kSevenTenTwelveMembersTo60);
  EXPECT_EQ(maxima, golden::kSevenTenTwelveMaxLengthTo60);
}

TEST(LengthSet, SweepMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = oracle::random_generators(rng, 2 + trial % 3, 15);
    const NumericalSemigroup s(gens);
    const auto& mg = s.generators();
    nsg::sweep_length_sets(s, 90, [&](i64 n, const nsg::LengthBits& bits) {
      if (!s.contains(n)) {
        EXPECT_TRUE(bits.empty()) << n;
        return;
      }
      const auto expected = oracle::lengths(mg, n);
      ASSERT_EQ(bits.lengths(), expected) << nsg::to_string(s) << " n=" << n;
      EXPECT_EQ(bits.deltas(), oracle::deltas(expected));
    });
  }
}

TEST(LengthSet, WideLengthSetsCrossWordBoundaries) {
  // <2,3> at 600 has lengths 200..300, spanning several 64-bit words.
  const auto data = nsg::length_set(NumericalSemigroup{2, 3}, 600);
  ASSERT_EQ(data.lengths.size(), 101U);
  EXPECT_EQ(data.min_len, 200);
  EXPECT_EQ(data.max_len, 300);
  EXPECT_EQ(data.delta, (Vec{1}));
}

TEST(LengthExtremes, AgreeWithSweepBeyondWindow) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const NumericalSemigroup s(oracle::random_generators(rng, 2 + trial % 3, 12));
    const nsg::LengthExtremes ext(s);
    nsg::sweep_length_sets(s, 600, [&](i64 n, const nsg::LengthBits& bits) {
      if (bits.empty()) return;
      const auto l = bits.lengths();
      ASSERT_EQ(ext.min_length(n), l.front()) << nsg::to_string(s) << " n=" << n;
      ASSERT_EQ(ext.max_length(n), l.back()) << nsg::to_string(s) << " n=" << n;
    });
  }
}

TEST(LengthExtremes, Recurrence) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const NumericalSemigroup s(oracle::random_generators(rng, 2 + trial % 3, 25));
    const nsg::LengthExtremes ext(s);
    const i64 n1 = s.multiplicity(), nk = s.largest_generator();
    const i64 start = ext.recurrence_start();
    for (i64 n = start + 1; n <= start + 5 * nk; ++n) {
      if (!s.contains(n)) continue;
      EXPECT_EQ(ext.min_length(n + nk), ext.min_length(n) + 1) << nsg::to_string(s) << " n=" << n;
      EXPECT_EQ(ext.max_length(n + n1), ext.max_length(n) + 1) << nsg::to_string(s) << " n=" << n;
    }
  }
}

TEST(LengthExtremes, FreeFunctions) {
  const NumericalSemigroup s{6, 9, 20};
  EXPECT_EQ(nsg::min_length(s, 60), 3);
  EXPECT_EQ(nsg::max_length(s, 60), 10);
  EXPECT_EQ(nsg::min_length(s, 0), 0);
  EXPECT_THROW(nsg::max_length(s, 43), nsg::error);
}

TEST(CountByLength, Examples) {
  EXPECT_EQ(nsg::count_by_length(NumericalSemigroup{6, 9, 20}, 1), 3);
  EXPECT_EQ(nsg::count_by_length(NumericalSemigroup{2, 3}, 4), 5);
  EXPECT_THROW(nsg::count_by_length(NumericalSemigroup{2, 3}, 0), nsg::error);
}

TEST(CountByLength, BoundedByLengthSpan) {
  for (const auto& gens : {Vec{2, 3}, Vec{6, 9, 20}, Vec{7, 10, 12}, Vec{5, 7, 8}}) {
    const NumericalSemigroup s(gens);
    const i64 width = s.largest_generator() - s.multiplicity();
    for (i64 len = 1; len <= 50; ++len) {
      const i64 count = nsg::count_by_length(s, len);
      EXPECT_LE(count, width * len + 1) << nsg::to_string(s) << " len=" << len;
      EXPECT_GE(count, 1);
    }
  }
  // <2,3> fills every value between 2l and 3l.
  for (i64 len = 1; len <= 50; ++len) EXPECT_EQ(nsg::count_by_length(NumericalSemigroup{2, 3}, len), len + 1);
}

TEST(CountByLength, MatchesOracle) {
  const Vec gens{5, 7, 8};
  const NumericalSemigroup s(gens);
  for (i64 len = 1; len <= 8; ++len) {
    i64 expected = 0;
    for (i64 n = 0; n <= 8 * len; ++n) {
      const auto l = oracle::lengths(gens, n);
      if (std::find(l.begin(), l.end(), len) != l.end()) ++expected;
    }
    EXPECT_EQ(nsg::count_by_length(s, len), expected) << len;
  }
}
