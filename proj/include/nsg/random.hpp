#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/integer.hpp"
#include "nsg/semigroup.hpp"

namespace nsg::random {

/// Seed contract. Every random decision is a pure function of
/// (master_seed, trial_index, decision_index):
///
///   splitmix64(x): x += 0x9E3779B97F4A7C15;
///                  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9;
///                  x = (x ^ (x >> 27)) * 0x94D049BB133111EB;
///                  return x ^ (x >> 31)
///   mix(a, b)    = splitmix64(a ^ splitmix64(b))
///   trial_seed   = mix(master_seed, trial_index)
///   uniform(i)   = (splitmix64(mix(trial_seed, i)) >> 11) * 2^-53   in [0, 1)
///   include      = uniform(i) < p
///
/// Decisions are indexed in the order the models document, so p = 0 never
/// includes and p = 1 always does, and a shared seed couples draws across p.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept { return splitmix64(a ^ splitmix64(b)); }

constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
  return mix(master_seed, trial_index);
}

constexpr double uniform(std::uint64_t seed, std::uint64_t decision_index) noexcept {
  return static_cast<double>(splitmix64(mix(seed, decision_index)) >> 11) * 0x1.0p-53;
}

constexpr bool bernoulli(std::uint64_t seed, std::uint64_t decision_index, double p) noexcept {
  return uniform(seed, decision_index) < p;
}

enum class Classification { trivial, non_cofinite, cofinite };

constexpr std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::trivial: return "trivial";
    case Classification::non_cofinite: return "non_cofinite";
    case Classification::cofinite: return "cofinite";
  }
  return "unknown";
}

struct Invariants {
  std::vector<i64> min_gens;
  i64 multiplicity = 1;
  i64 embedding_dim = 1;
  i64 genus = 0;
  i64 frobenius = -1;
};

/// One draw from a random model.
struct TrialReport {
  std::vector<i64> selected;                       ///< sampled set A (generator models)
  std::vector<std::pair<i64, i64>> selected_pairs;  ///< sampled (a, b) (intersection model)
  Classification classification = Classification::trivial;
  std::optional<Invariants> invariants;  ///< present iff cofinite
};

inline Invariants invariants_of(const NumericalSemigroup& s) {
  return {s.generators(), s.multiplicity(), static_cast<i64>(s.embedding_dimension()), s.genus(), s.frobenius()};
}

/// Classifies an explicit generating set: empty -> trivial, gcd > 1 ->
/// non-cofinite, otherwise cofinite with invariants.
inline TrialReport classify(std::vector<i64> selected) {
  TrialReport out;
  std::sort(selected.begin(), selected.end());
  out.selected = std::move(selected);
  if (out.selected.empty()) return out;
  if (gcd_of(out.selected) != 1) {
    out.classification = Classification::non_cofinite;
    return out;
  }
  out.classification = Classification::cofinite;
  out.invariants = invariants_of(NumericalSemigroup(out.selected));
  return out;
}

struct ErParams {
  i64 M = 1;
  double p = 0.0;

  void validate() const {
    if (M < 1) fail(errc::invalid_params, "M must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::invalid_params, "p must lie in [0, 1]");
  }
};

/// A includes n = 1..M independently with probability p; decision n-1 decides n.
inline TrialReport sample_er(const ErParams& params, std::uint64_t seed) {
  params.validate();
  std::vector<i64> selected;
  for (i64 n = 1; n <= params.M; ++n)
    if (bernoulli(seed, static_cast<std::uint64_t>(n - 1), params.p)) selected.push_back(n);
  return classify(std::move(selected));
}

struct MultiplicityParams {
  i64 M = 2;
  i64 m = 2;
  double p = 0.0;

  void validate() const {
    if (m < 2) fail(errc::invalid_params, "m must be at least 2");
    if (m > M) fail(errc::invalid_params, "m must not exceed M");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::invalid_params, "p must lie in [0, 1]");
  }
};

/// S = <{m} u A> u [M+1, inf) with A drawn from [m+1, M]; decision i decides m+1+i.
inline TrialReport sample_multiplicity_model(const MultiplicityParams& params, std::uint64_t seed) {
  params.validate();
  const i64 M = params.M, m = params.m;
  TrialReport out;
  for (i64 n = m + 1; n <= M; ++n)
    if (bernoulli(seed, static_cast<std::uint64_t>(n - m - 1), params.p)) out.selected.push_back(n);

  // Members of <{m} u A> up to M, then the whole tail. Everything above
  // M + m is a member plus m, so members in [1, M + m] generate S.
  std::vector<char> member(static_cast<std::size_t>(M + m + 1), 0);
  member[0] = 1;
  std::vector<i64> gens{m};
  gens.insert(gens.end(), out.selected.begin(), out.selected.end());
  for (i64 x = 1; x <= M; ++x)
    for (i64 g : gens)
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
  std::vector<i64> generating;
  for (i64 x = 1; x <= M + m; ++x)
    if (x > M || member[static_cast<std::size_t>(x)]) generating.push_back(x);
  out.classification = Classification::cofinite;
  out.invariants = invariants_of(NumericalSemigroup(generating));
  return out;
}

struct IntersectionParams {
  i64 N = 3;
  double p = 0.0;

  void validate() const {
    if (N < 3) fail(errc::invalid_params, "N must be at least 3");
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::invalid_params, "p must lie in [0, 1]");
  }
};

/// Coprime pairs 2 <= a < b <= N in lexicographic order.
inline std::vector<std::pair<i64, i64>> coprime_pairs(i64 N) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 a = 2; a <= N; ++a)
    for (i64 b = a + 1; b <= N; ++b)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

/// S = intersection of <a, b> over the selected coprime pairs (decision i
/// decides the i-th pair); no selection gives the whole of Z>=0.
inline TrialReport sample_intersection_model(const IntersectionParams& params, std::uint64_t seed) {
  params.validate();
  TrialReport out;
  const auto pairs = coprime_pairs(params.N);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (bernoulli(seed, i, params.p)) out.selected_pairs.push_back(pairs[i]);

  out.classification = Classification::cofinite;
  if (out.selected_pairs.empty()) {
    out.invariants = invariants_of(NumericalSemigroup{1});
    return out;
  }
  // n is a gap of the intersection iff it is a gap of some selected pair.
  i64 top = 0;
  for (auto [a, b] : out.selected_pairs) top = std::max(top, sylvester_frobenius(a, b));
  std::vector<char> member(static_cast<std::size_t>(top + 1), 1);
  for (auto [a, b] : out.selected_pairs) {
    const NumericalSemigroup pair{a, b};
    for (i64 gap : pair.gaps()) member[static_cast<std::size_t>(gap)] = 0;
  }
  i64 m = 1;
  while (m <= top && !member[static_cast<std::size_t>(m)]) ++m;
  std::vector<i64> generating;
  for (i64 x = 1; x <= top + m; ++x)
    if (x > top || member[static_cast<std::size_t>(x)]) generating.push_back(x);
  out.invariants = invariants_of(NumericalSemigroup(generating));
  return out;
}

/// Monte-Carlo aggregate over independent trials.
struct SampleStats {
  i64 trials = 0;
  i64 cofinite = 0;
  double p_cofinite = 0.0;
  double mean_e = 0.0;  ///< over cofinite trials
  double mean_g = 0.0;  ///< over cofinite trials
  double mean_f = 0.0;  ///< over cofinite trials
  double ratio_lhs = 0.0;  ///< mean_e
  double ratio_rhs = 0.0;  ///< p / (1 - p) * mean_g; infinite at p = 1
};

/// Runs `trials` draws of `sample(trial_seed)` and reduces them in trial
/// order. Work is split across `threads` workers by index; the result does
/// not depend on the split.
template <typename Sample>
SampleStats monte_carlo(Sample&& sample, double p, i64 trials, std::uint64_t master_seed, unsigned threads = 1) {
  if (trials < 1) fail(errc::invalid_params, "trials must be at least 1");
  std::vector<TrialReport> reports(static_cast<std::size_t>(trials));
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  auto work = [&](unsigned worker) {
    for (i64 t = worker; t < trials; t += threads)
      reports[static_cast<std::size_t>(t)] = sample(trial_seed(master_seed, static_cast<std::uint64_t>(t)));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  SampleStats out;
  out.trials = trials;
  double sum_e = 0, sum_g = 0, sum_f = 0;
  for (const auto& r : reports) {
    if (r.classification != Classification::cofinite) continue;
    ++out.cofinite;
    sum_e += static_cast<double>(r.invariants->embedding_dim);
    sum_g += static_cast<double>(r.invariants->genus);
    sum_f += static_cast<double>(r.invariants->frobenius);
  }
  out.p_cofinite = static_cast<double>(out.cofinite) / static_cast<double>(trials);
  if (out.cofinite > 0) {
    const auto c = static_cast<double>(out.cofinite);
    out.mean_e = sum_e / c;
    out.mean_g = sum_g / c;
    out.mean_f = sum_f / c;
  }
  out.ratio_lhs = out.mean_e;
  out.ratio_rhs = p < 1.0 ? p / (1.0 - p) * out.mean_g : std::numeric_limits<double>::infinity();
  return out;
}

inline SampleStats monte_carlo_er(const ErParams& params, i64 trials, std::uint64_t master_seed,
                                  unsigned threads = 1) {
  params.validate();
  return monte_carlo([&](std::uint64_t seed) { return sample_er(params, seed); }, params.p, trials, master_seed,
                     threads);
}

struct ScanRow {
  double p = 0.0;
  SampleStats stats;
};

/// One row per p, all sharing master_seed so draws are coupled across p.
inline std::vector<ScanRow> threshold_scan(i64 M, const std::vector<double>& p_values, i64 trials,
                                           std::uint64_t master_seed, unsigned threads = 1) {
  if (!std::is_sorted(p_values.begin(), p_values.end()))
    fail(errc::invalid_params, "p values must be ascending");
  std::vector<ScanRow> out;
  for (double p : p_values) out.push_back({p, monte_carlo_er({M, p}, trials, master_seed, threads)});
  return out;
}

enum class Model { er, multiplicity, intersection };

constexpr std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::er: return "er";
    case Model::multiplicity: return "mult";
    case Model::intersection: return "inter";
  }
  return "unknown";
}

/// One grid point: `size` is M for er/mult and N for inter; `m` only for mult.
struct GridPoint {
  i64 size = 1;
  i64 m = 0;
  double p = 0.0;
};

struct SweepRow {
  Model model = Model::er;
  GridPoint point;
  SampleStats stats;
};

inline SampleStats run_model(Model model, const GridPoint& point, i64 trials, std::uint64_t master_seed,
                             unsigned threads = 1) {
  switch (model) {
    case Model::er:
      return monte_carlo_er({point.size, point.p}, trials, master_seed, threads);
    case Model::multiplicity: {
      const MultiplicityParams params{point.size, point.m, point.p};
      params.validate();
      return monte_carlo([&](std::uint64_t s) { return sample_multiplicity_model(params, s); }, point.p, trials,
                         master_seed, threads);
    }
    case Model::intersection: {
      const IntersectionParams params{point.size, point.p};
      params.validate();
      return monte_carlo([&](std::uint64_t s) { return sample_intersection_model(params, s); }, point.p, trials,
                         master_seed, threads);
    }
  }
  fail(errc::invalid_params, "unknown model");
}

/// Batch driver; rows follow the grid order.
inline std::vector<SweepRow> model_sweep(Model model, const std::vector<GridPoint>& grid, i64 trials,
                                         std::uint64_t master_seed, unsigned threads = 1) {
  std::vector<SweepRow> out;
  out.reserve(grid.size());
  for (const auto& point : grid) out.push_back({model, point, run_model(model, point, trials, master_seed, threads)});
  return out;
}

}  // namespace nsg::random
