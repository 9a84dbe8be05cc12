#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsg/delta.hpp"
#include "nsg/error.hpp"
#include "nsg/integer.hpp"
#include "nsg/lengths.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// <a, a+d, ..., a+kd> with gcd(a, d) = 1 and 1 <= k <= a - 1.
struct ArithParams {
  i64 a = 2;
  i64 d = 1;
  i64 k = 1;

  void validate() const {
    if (a < 2 || d < 1 || k < 1 || k > a - 1)
      fail(errc::invalid_params, "need a >= 2, d >= 1, 1 <= k <= a-1 (got a=" + std::to_string(a) +
                                     ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
    if (std::gcd(a, d) != 1) fail(errc::invalid_params, "gcd(a, d) must be 1");
  }

  std::vector<i64> generators() const {
    validate();
    std::vector<i64> out;
    for (i64 i = 0; i <= k; ++i) out.push_back(checked::add(a, checked::mul(i, d)));
    return out;
  }

  NumericalSemigroup semigroup() const { return NumericalSemigroup(generators()); }
};

/// n = c1 * a + c2 * d with 0 <= c2 < a.
struct CanonicalRep {
  i64 c1 = 0;
  i64 c2 = 0;
};

inline CanonicalRep canonical_rep(const ArithParams& p, i64 n) {
  p.validate();
  if (n < 0) fail(errc::invalid_argument, "n must be non-negative");
  const i64 inv = mod_inverse(p.d % p.a, p.a);
  const i64 c2 = static_cast<i64>(static_cast<__int128>(n % p.a) * inv % p.a);
  const i64 rest = n - checked::mul(c2, p.d);
  if (rest < 0)
    fail(errc::no_representation, std::to_string(n) + " = c1*" + std::to_string(p.a) + " + " + std::to_string(c2) +
                                      "*" + std::to_string(p.d) + " forces c1 < 0");
  return {rest / p.a, c2};
}

namespace detail {
inline std::optional<CanonicalRep> try_canonical_rep(const ArithParams& p, i64 n) {
  try {
    return canonical_rep(p, n);
  } catch (const error& e) {
    if (e.code() == errc::no_representation) return std::nullopt;
    throw;
  }
}
}  // namespace detail

/// n is a member iff it has a canonical representation with c2 <= c1 * k.
inline bool arith_membership(const ArithParams& p, i64 n) {
  if (n < 0) return false;
  const auto rep = detail::try_canonical_rep(p, n);
  return rep && rep->c2 <= checked::mul(rep->c1, p.k);
}

/// Closed-form length set: { c1 + j d : K <= j <= 0 } with
/// K = (c2 - c1 k) / (a + k d). Ascending.
inline std::vector<i64> arith_length_set(const ArithParams& p, i64 n) {
  if (!arith_membership(p, n))
    fail(errc::not_member, std::to_string(n) + " is not in the arithmetical semigroup");
  const auto rep = canonical_rep(p, n);
  const i64 lowest_j = ceil_div(rep.c2 - rep.c1 * p.k, p.a + p.k * p.d);
  std::vector<i64> out;
  for (i64 j = lowest_j; j <= 0; ++j) out.push_back(rep.c1 + j * p.d);
  return out;
}

inline std::vector<i64> arith_delta(const ArithParams& p) {
  p.validate();
  return {p.d};
}

inline std::vector<i64> two_gen_delta(i64 n1, i64 n2) {
  if (n1 < 2 || n2 <= n1 || std::gcd(n1, n2) != 1)
    fail(errc::invalid_params, "need coprime 1 < n1 < n2");
  return {n2 - n1};
}

/// A semigroup family with a closed-form delta set.
struct DeltaFamily {
  NumericalSemigroup semigroup;
  std::vector<i64> predicted_delta;
};

/// <n, n+k, (k+1)n - k>, whose delta set is {k, 2k, ..., floor((n+k-1)/(k+2)) k}.
inline DeltaFamily family_deltafull(i64 n, i64 k) {
  if (n < 3 || k < 1 || std::gcd(n, k) != 1)
    fail(errc::invalid_family_params, "need n >= 3, k >= 1, gcd(n, k) = 1");
  const i64 third = checked::sub(checked::mul(k + 1, n), k);
  std::vector<i64> predicted;
  const i64 top = (n + k - 1) / (k + 2);
  for (i64 i = 1; i <= top; ++i) predicted.push_back(i * k);
  return {NumericalSemigroup{n, n + k, third}, predicted};
}

/// <n, n+1, n^2 - n - 1>, whose delta set is {1, ..., n-2} plus {2n - 5}.
inline DeltaFamily family_deltaskips(i64 n) {
  if (n < 3) fail(errc::invalid_family_params, "need n >= 3");
  const i64 third = checked::sub(checked::mul(n, n), n + 1);
  std::set<i64> predicted;
  for (i64 i = 1; i <= n - 2; ++i) predicted.insert(i);
  predicted.insert(2 * n - 5);
  return {NumericalSemigroup{n, n + 1, third}, {predicted.begin(), predicted.end()}};
}

struct FamilyCheck {
  bool three_generated = false;
  bool delta_matches = false;
  std::vector<i64> computed_delta;
};

/// Runs the generic delta-set computation against a family's prediction.
inline FamilyCheck validate_family(const DeltaFamily& family, const Budget& budget = {}) {
  FamilyCheck out;
  out.three_generated = family.semigroup.embedding_dimension() == 3;
  out.computed_delta = delta_semigroup(family.semigroup, budget);
  out.delta_matches = out.computed_delta == family.predicted_delta;
  return out;
}

/// Outcome of comparing the sets of length sets of two semigroups up to a bound.
struct LengthSystemComparison {
  bool equal = true;                ///< equal up to n_max only, never a proof
  std::optional<int> witness_side;  ///< 1 or 2: which semigroup owns the unmatched length set
  i64 witness_element = 0;
  std::vector<i64> witness_lengths;
};

namespace detail {
inline std::vector<std::pair<i64, std::vector<i64>>> length_system(const NumericalSemigroup& s, i64 n_max,
                                                                    const Budget& budget) {
  std::vector<std::pair<i64, std::vector<i64>>> out;
  sweep_length_sets(
      s, n_max,
      [&](i64 n, const LengthBits& bits) {
        if (!bits.empty()) out.emplace_back(n, bits.lengths());
      },
      budget);
  return out;
}
}  // namespace detail

inline LengthSystemComparison length_systems_equal(const NumericalSemigroup& s1, const NumericalSemigroup& s2,
                                                   i64 n_max, const Budget& budget = {}) {
  const auto sys1 = detail::length_system(s1, n_max, budget);
  const auto sys2 = detail::length_system(s2, n_max, budget);
  std::set<std::vector<i64>> set1, set2;
  for (const auto& [n, l] : sys1) set1.insert(l);
  for (const auto& [n, l] : sys2) set2.insert(l);

  // The witness is the smallest element whose length set the other side lacks.
  LengthSystemComparison out;
  auto probe = [&](const auto& sys, const auto& other, int side) {
    for (const auto& [n, l] : sys) {
      if (other.count(l)) continue;
      if (!out.witness_side || n < out.witness_element) {
        out.equal = false;
        out.witness_side = side;
        out.witness_element = n;
        out.witness_lengths = l;
      }
      return;
    }
  };
  probe(sys1, set2, 1);
  probe(sys2, set1, 2);
  return out;
}

}  // namespace nsg
