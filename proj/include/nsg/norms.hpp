#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Norm selector: a finite power r >= 1, or the max norm.
struct NormOrder {
  int power = 1;
  bool infinity = false;

  static constexpr NormOrder finite(int r) { return {r, false}; }
  static constexpr NormOrder max_norm() { return {0, true}; }
};

struct NormExtremes {
  i64 min_value = 0;
  i64 max_value = 0;
};

/// Min and max over Z(n) of sum a_i^r (the r-th power of the l_r norm), or of
/// max a_i for the max norm.
inline NormExtremes norm_extremes(const NumericalSemigroup& s, i64 n, NormOrder order) {
  if (!order.infinity && order.power < 1) fail(errc::invalid_argument, "norm power must be at least 1");
  NormExtremes out{std::numeric_limits<i64>::max(), std::numeric_limits<i64>::min()};
  for_each_factorization(s, n, [&](std::span<const i64> e) {
    i64 value = 0;
    if (order.infinity) {
      value = *std::max_element(e.begin(), e.end());
    } else {
      for (i64 x : e) value = checked::add(value, checked::pow(x, order.power));
    }
    out.min_value = std::min(out.min_value, value);
    out.max_value = std::max(out.max_value, value);
  });
  return out;
}

/// Smallest max-norm over Z(n) for every n in [0, n_max]; -1 marks gaps.
/// Level t collects the elements reachable with every exponent at most t,
/// grown by a bounded-multiplicity reachability pass per generator.
inline std::vector<i64> min_max_norm_sequence(const NumericalSemigroup& s, i64 n_max, const Budget& budget = {}) {
  if (n_max < 0) return {};
  if (n_max > budget.elements) fail(errc::bound_too_large, "sequence range exceeds the element budget");
  const auto size = static_cast<std::size_t>(n_max + 1);
  std::vector<i64> best(size, -1);
  i64 remaining = 0;
  for (i64 n = 0; n <= n_max; ++n) remaining += s.contains(n) ? 1 : 0;

  std::vector<char> reach(size), next(size);
  std::vector<i64> last(size);
  for (i64 t = 0; remaining > 0; ++t) {
    std::fill(reach.begin(), reach.end(), 0);
    reach[0] = 1;
    for (i64 g : s.generators()) {
      // next[x] iff reach[x - j g] for some 0 <= j <= t.
      for (i64 x = 0; x <= n_max; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        if (reach[ux])
          last[ux] = x;
        else
          last[ux] = x >= g ? last[ux - static_cast<std::size_t>(g)] : -1;
        next[ux] = last[ux] >= 0 && (x - last[ux]) / g <= t;
      }
      reach.swap(next);
    }
    for (std::size_t x = 0; x < size; ++x) {
      if (reach[x] && best[x] < 0) {
        best[x] = t;
        --remaining;
      }
    }
  }
  return best;
}

}  // namespace nsg
