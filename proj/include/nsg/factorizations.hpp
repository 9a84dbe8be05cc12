#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/integer.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Caps on how much work the scanning operations will take on before
/// refusing with errc::bound_too_large.
struct Budget {
  i64 elements = 100'000'000;
  i64 factorizations = 50'000'000;
};

/// Exponent vector over the minimal generators of its semigroup.
struct Factorization {
  std::vector<i64> exponents;

  i64 length() const {
    i64 total = 0;
    for (i64 x : exponents) total += x;
    return total;
  }

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline void require_member(const NumericalSemigroup& s, i64 n) {
  if (!s.contains(n)) fail(errc::not_member, std::to_string(n) + " is not in " + to_string(s));
}

// Fills exponents[0..=idx] for the remainder `rest` using generators 0..idx.
template <typename Visit>
void enumerate_factorizations(std::span<const i64> gens, std::size_t idx, i64 rest, std::vector<i64>& exponents,
                              Visit& visit) {
  const i64 g = gens[idx];
  if (idx == 0) {
    if (rest % g == 0) {
      exponents[0] = rest / g;
      visit(std::as_const(exponents));
    }
    return;
  }
  if (idx == 1) {
    const i64 g0 = gens[0];
    // Solve x1 * g + x0 * g0 = rest directly along the admissible residue class of x1.
    const i64 d = std::gcd(g0, g);
    if (rest % d != 0) return;
    const i64 step = g0 / d;
    const i64 first = step == 1 ? 0 : mod((rest / d) % step * mod_inverse((g / d) % step, step), step);
    for (i64 x = first; x * g <= rest; x += step) {
      exponents[1] = x;
      exponents[0] = (rest - x * g) / g0;
      visit(std::as_const(exponents));
    }
    exponents[1] = 0;
    return;
  }
  for (i64 x = 0; x * g <= rest; ++x) {
    exponents[idx] = x;
    enumerate_factorizations(gens, idx - 1, rest - x * g, exponents, visit);
  }
  exponents[idx] = 0;
}

}  // namespace detail

/// Calls `visit(std::span<const i64>)` once per factorization of `n`, in no
/// particular order. The span is only valid during the call.
template <typename Visit>
void for_each_factorization(const NumericalSemigroup& s, i64 n, Visit&& visit) {
  detail::require_member(s, n);
  const auto& gens = s.generators();
  std::vector<i64> exponents(gens.size(), 0);
  auto adapter = [&](const std::vector<i64>& e) { visit(std::span<const i64>(e)); };
  detail::enumerate_factorizations(std::span<const i64>(gens), gens.size() - 1, n, exponents, adapter);
}

/// Every factorization of `n`, in descending lexicographic order of the
/// exponent vectors.
inline std::vector<Factorization> factorizations(const NumericalSemigroup& s, i64 n, const Budget& budget = {}) {
  std::vector<Factorization> out;
  for_each_factorization(s, n, [&](std::span<const i64> e) {
    if (static_cast<i64>(out.size()) >= budget.factorizations)
      fail(errc::bound_too_large, "more than " + std::to_string(budget.factorizations) + " factorizations");
    out.push_back(Factorization{{e.begin(), e.end()}});
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline i64 factorization_count(const NumericalSemigroup& s, i64 n) {
  i64 count = 0;
  for_each_factorization(s, n, [&](std::span<const i64>) { ++count; });
  return count;
}

}  // namespace nsg
