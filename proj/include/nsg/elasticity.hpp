#pragma once

#include <utility>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/lengths.hpp"
#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// rho(n) = L(n) / l(n), kept as the unreduced pair plus the exact value.
struct ElasticityValue {
  i64 numerator = 1;
  i64 denominator = 1;
  Rational value{1};
};

inline ElasticityValue elasticity_element(const LengthExtremes& extremes, i64 n) {
  if (n == 0) fail(errc::zero_element, "elasticity is undefined at 0");
  const i64 hi = extremes.max_length(n);
  const i64 lo = extremes.min_length(n);
  return {hi, lo, Rational(hi, lo)};
}

inline ElasticityValue elasticity_element(const NumericalSemigroup& s, i64 n) {
  detail::require_member(s, n);
  return elasticity_element(LengthExtremes(s), n);
}

struct SemigroupElasticity {
  Rational value;
  i64 witness = 0;  ///< element attaining the supremum
};

/// rho(S) = n_k / n_1, confirmed by computing rho(n_1 * n_k) directly.
inline SemigroupElasticity elasticity_semigroup(const NumericalSemigroup& s) {
  const Rational value(s.largest_generator(), s.multiplicity());
  const i64 witness = checked::mul(s.multiplicity(), s.largest_generator());
  const auto attained = elasticity_element(s, witness).value;
  if (attained != value)
    fail(errc::internal, "elasticity of " + to_string(s) + " not attained at n1*nk (got " + attained.to_string() + ")");
  return {value, witness};
}

/// (n, rho(n)) for every member 0 < n <= n_max, ascending.
inline std::vector<std::pair<i64, Rational>> elasticity_profile(const NumericalSemigroup& s, i64 n_max,
                                                                const Budget& budget = {}) {
  if (n_max < s.multiplicity()) fail(errc::invalid_argument, "n_max must be at least the multiplicity");
  if (n_max > budget.elements) fail(errc::bound_too_large, "profile range exceeds the element budget");
  const LengthExtremes extremes(s, budget);
  std::vector<std::pair<i64, Rational>> out;
  for (i64 n = 1; n <= n_max; ++n)
    if (s.contains(n)) out.emplace_back(n, elasticity_element(extremes, n).value);
  return out;
}

}  // namespace nsg
