#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "nsg/random.hpp"

using nsg::i64;
using namespace nsg::random;
using Vec = std::vector<i64>;

TEST(SeedContract, SplitmixReference) {
  // First outputs of the reference splitmix64 stream seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(splitmix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(mix(1, 2), splitmix64(1 ^ splitmix64(2)));
  const double u = uniform(trial_seed(42, 0), 0);
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
}

TEST(Classify, Cases) {
  EXPECT_EQ(classify({}).classification, Classification::trivial);
  EXPECT_EQ(classify({4, 6}).classification, Classification::non_cofinite);
  const auto r = classify({6, 9, 18, 20, 32});
  ASSERT_EQ(r.classification, Classification::cofinite);
  EXPECT_EQ(r.invariants->min_gens, (Vec{6, 9, 20}));
  EXPECT_EQ(r.invariants->embedding_dim, 3);
  EXPECT_EQ(r.invariants->frobenius, 43);
  EXPECT_EQ(r.invariants->genus, 22);
}

TEST(ErModel, Endpoints) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const auto none = sample_er({50, 0.0}, seed);
    EXPECT_TRUE(none.selected.empty());
    EXPECT_EQ(none.classification, Classification::trivial);
    const auto all = sample_er({50, 1.0}, seed);
    EXPECT_EQ(all.selected.size(), 50U);
    ASSERT_EQ(all.classification, Classification::cofinite);
    EXPECT_EQ(all.invariants->min_gens, (Vec{1}));
    EXPECT_EQ(all.invariants->genus, 0);
  }
  const auto zero = monte_carlo_er({50, 0.0}, 100, 7);
  EXPECT_EQ(zero.cofinite, 0);
  EXPECT_EQ(zero.p_cofinite, 0.0);
  const auto one = monte_carlo_er({50, 1.0}, 100, 7);
  EXPECT_EQ(one.p_cofinite, 1.0);
  EXPECT_EQ(one.mean_e, 1.0);
  EXPECT_TRUE(std::isinf(one.ratio_rhs));
  EXPECT_THROW(sample_er({50, 1.5}, 0), nsg::error);
  EXPECT_THROW(sample_er({0, 0.5}, 0), nsg::error);
}

TEST(MultiplicityModel, Endpoints) {
  const auto none = sample_multiplicity_model({30, 7, 0.0}, 3);
  ASSERT_TRUE(none.invariants);
  EXPECT_TRUE(none.selected.empty());
  EXPECT_EQ(none.invariants->multiplicity, 7);
  // Only multiples of 7 up to 30 survive below the tail.
  EXPECT_EQ(none.invariants->frobenius, 30);
  const auto all = sample_multiplicity_model({30, 7, 1.0}, 3);
  EXPECT_EQ(all.invariants->min_gens, (Vec{7, 8, 9, 10, 11, 12, 13}));
  EXPECT_EQ(all.invariants->frobenius, 6);
  EXPECT_THROW(sample_multiplicity_model({30, 1, 0.5}, 0), nsg::error);
  EXPECT_THROW(sample_multiplicity_model({5, 7, 0.5}, 0), nsg::error);
}

TEST(MultiplicityModel, InvariantsRespectConstruction) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const MultiplicityParams params{40, 6, 0.2};
    const auto r = sample_multiplicity_model(params, seed);
    ASSERT_TRUE(r.invariants);
    EXPECT_EQ(r.invariants->multiplicity, 6);
    EXPECT_LE(r.invariants->frobenius, 40);
    EXPECT_LE(r.invariants->embedding_dim, 6);
    const nsg::NumericalSemigroup s(r.invariants->min_gens);
    for (i64 a : r.selected) EXPECT_TRUE(s.contains(a));
    for (i64 x = 41; x <= 60; ++x) EXPECT_TRUE(s.contains(x));
  }
}

TEST(IntersectionModel, Endpoints) {
  const auto none = sample_intersection_model({8, 0.0}, 5);
  EXPECT_TRUE(none.selected_pairs.empty());
  EXPECT_EQ(none.invariants->min_gens, (Vec{1}));
  const auto all = sample_intersection_model({4, 1.0}, 5);
  EXPECT_EQ(all.selected_pairs, (std::vector<std::pair<i64, i64>>{{2, 3}, {3, 4}}));
  const nsg::NumericalSemigroup s(all.invariants->min_gens);
  EXPECT_EQ(s.gaps(), (Vec{1, 2, 5}));
  EXPECT_THROW(sample_intersection_model({2, 0.5}, 0), nsg::error);
}

TEST(IntersectionModel, GapsAreUnionOfPairGaps) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = sample_intersection_model({9, 0.3}, seed);
    std::set<i64> expected;
    for (auto [a, b] : r.selected_pairs)
      for (i64 g : nsg::NumericalSemigroup{a, b}.gaps()) expected.insert(g);
    const nsg::NumericalSemigroup s(r.invariants->min_gens);
    const auto gaps = s.gaps();
    EXPECT_EQ(Vec(expected.begin(), expected.end()), gaps) << seed;
  }
}

TEST(MonteCarlo, DeterministicAcrossThreads) {
  const auto a = monte_carlo_er({60, 0.05}, 400, 2024, 1);
  const auto b = monte_carlo_er({60, 0.05}, 400, 2024, 4);
  const auto c = monte_carlo_er({60, 0.05}, 400, 2024, 1);
  EXPECT_EQ(a.cofinite, b.cofinite);
  EXPECT_EQ(a.mean_e, b.mean_e);
  EXPECT_EQ(a.mean_g, b.mean_g);
  EXPECT_EQ(a.mean_f, b.mean_f);
  EXPECT_EQ(a.mean_g, c.mean_g);
  for (auto model : {Model::multiplicity, Model::intersection}) {
    const GridPoint point{model == Model::multiplicity ? 40 : 10, 5, 0.3};
    const auto x = run_model(model, point, 200, 9, 1);
    const auto y = run_model(model, point, 200, 9, 3);
    EXPECT_EQ(x.mean_g, y.mean_g);
    EXPECT_EQ(x.mean_e, y.mean_e);
  }
}

TEST(MonteCarlo, CommonRandomNumbersAreMonotone) {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.01 * i);
  const auto rows = threshold_scan(80, grid, 300, 77, 2);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].stats.cofinite, rows[i - 1].stats.cofinite);
  EXPECT_THROW(threshold_scan(80, {0.2, 0.1}, 10, 1), nsg::error);
}

TEST(MonteCarlo, PinnedRegression) {
  // Guards the seed contract: any change to the draw order moves these.
  const auto st = monte_carlo_er({100, 0.03}, 500, 12345, 1);
  const auto again = monte_carlo_er({100, 0.03}, 500, 12345, 8);
  EXPECT_EQ(st.cofinite, again.cofinite);
  EXPECT_EQ(st.cofinite, 314);
  EXPECT_DOUBLE_EQ(st.mean_g * static_cast<double>(st.cofinite), 132486.0);
}

TEST(ModelSweep, Shapes) {
  EXPECT_TRUE(model_sweep(Model::er, {}, 10, 1).empty());
  const GridPoint point{50, 0, 0.1};
  const auto rows = model_sweep(Model::er, {point}, 100, 5);
  ASSERT_EQ(rows.size(), 1U);
  const auto direct = run_model(Model::er, point, 100, 5);
  EXPECT_EQ(rows[0].stats.cofinite, direct.cofinite);
  EXPECT_EQ(rows[0].stats.mean_g, direct.mean_g);
}
