#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/lengths.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Delta set of the whole semigroup.
///
/// Delta(n) = Delta(n - n_1 n_k) for every n >= N = 2k n_2 n_k^2 + n_1 n_k,
/// so the union over 0 < n < N is the answer. The repetition is re-checked
/// on [N, N + n_1 n_k) and a mismatch raises errc::internal.
inline std::vector<i64> delta_semigroup(const NumericalSemigroup& s, const Budget& budget = {}) {
  if (s.embedding_dimension() < 2) fail(errc::invalid_argument, "delta set needs at least two generators");
  const i64 bound = s.delta_period_bound();
  const i64 period = checked::mul(s.multiplicity(), s.largest_generator());
  const i64 last = checked::add(bound, period) - 1;
  if (last > budget.elements)
    fail(errc::bound_too_large, "delta scan to " + std::to_string(last) + " exceeds the element budget " +
                                    std::to_string(budget.elements));

  std::set<i64> all;
  // Delta(n) for n in [N - period, N + period), indexed from N - period.
  const i64 band_start = bound - period;
  std::vector<std::vector<i64>> band(static_cast<std::size_t>(2 * period));
  sweep_length_sets(
      s, last,
      [&](i64 n, const LengthBits& bits) {
        if (n == 0 || bits.empty()) return;
        auto d = bits.deltas();
        if (n < bound) all.insert(d.begin(), d.end());
        if (n >= band_start) band[static_cast<std::size_t>(n - band_start)] = std::move(d);
      },
      budget);

  for (i64 i = 0; i < period; ++i) {
    const auto& early = band[static_cast<std::size_t>(i)];
    const auto& late = band[static_cast<std::size_t>(i + period)];
    if (early != late)
      fail(errc::internal, "delta periodicity check failed at n = " + std::to_string(bound + i) + " for " +
                               to_string(s));
  }
  std::vector<i64> out(all.begin(), all.end());
  if (!out.empty() && out.front() != std::accumulate(out.begin(), out.end(), i64{0},
                                                     [](i64 a, i64 b) { return std::gcd(a, b); }))
    fail(errc::internal, "min of delta set differs from its gcd for " + to_string(s));
  return out;
}

/// (n, Delta(n)) for every member 0 < n <= n_max, ascending.
inline std::vector<std::pair<i64, std::vector<i64>>> delta_sequence(const NumericalSemigroup& s, i64 n_max,
                                                                     const Budget& budget = {}) {
  if (n_max < s.multiplicity()) fail(errc::invalid_argument, "n_max must be at least the multiplicity");
  std::vector<std::pair<i64, std::vector<i64>>> out;
  sweep_length_sets(
      s, n_max,
      [&](i64 n, const LengthBits& bits) {
        if (n > 0 && !bits.empty()) out.emplace_back(n, bits.deltas());
      },
      budget);
  return out;
}

}  // namespace nsg
