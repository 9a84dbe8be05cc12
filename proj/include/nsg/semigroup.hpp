#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/integer.hpp"

namespace nsg {

/// Largest multiplicity for which a residue table is materialized.
inline constexpr i64 kMaxMultiplicity = i64{1} << 24;

namespace detail {

inline void validate_generators(std::span<const i64> gens) {
  if (gens.empty()) fail(errc::invalid_argument, "generator list is empty");
  for (i64 g : gens)
    if (g < 1) fail(errc::invalid_argument, "generators must be positive, got " + std::to_string(g));
}

// Least element of <gens> in every residue class mod gens' minimum, via a
// shortest-path pass over the residue graph. Requires gcd(gens) = 1; entry 0
// is 0 (the empty sum).
inline std::vector<i64> apery_table(std::span<const i64> gens) {
  const i64 m = *std::min_element(gens.begin(), gens.end());
  if (m > kMaxMultiplicity)
    fail(errc::bound_too_large, "multiplicity " + std::to_string(m) + " exceeds the residue table limit");

  // Only the smallest generator per residue class can matter.
  std::vector<i64> best(static_cast<std::size_t>(m), 0);
  for (i64 g : gens) {
    auto r = static_cast<std::size_t>(g % m);
    if (r != 0 && (best[r] == 0 || g < best[r])) best[r] = g;
  }
  std::vector<i64> steps;
  for (i64 g : best)
    if (g != 0) steps.push_back(g);

  constexpr i64 unreached = std::numeric_limits<i64>::max();
  std::vector<i64> dist(static_cast<std::size_t>(m), unreached);
  dist[0] = 0;
  using Entry = std::pair<i64, i64>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (i64 g : steps) {
      i64 next = checked::add(d, g);
      auto to = static_cast<std::size_t>((r + g) % m);
      if (next < dist[to]) {
        dist[to] = next;
        queue.emplace(next, static_cast<i64>(to));
      }
    }
  }
  for (i64 d : dist)
    if (d == unreached) fail(errc::gcd_not_one, "generators do not reach every residue class");
  return dist;
}

// Minimal generators among `gens` (gcd 1) given their Apery table.
inline std::vector<i64> minimal_from_apery(std::span<const i64> gens, const std::vector<i64>& apery) {
  const i64 m = static_cast<i64>(apery.size());
  std::vector<i64> out{m};
  std::vector<i64> candidates(gens.begin(), gens.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (i64 g : candidates) {
    const i64 r = g % m;
    if (r == 0 || apery[static_cast<std::size_t>(r)] != g) continue;
    bool decomposable = false;
    for (i64 j = 1; j < m && !decomposable; ++j) {
      const i64 rest = mod(r - j, m);
      if (rest == 0) continue;
      decomposable = apery[static_cast<std::size_t>(j)] + apery[static_cast<std::size_t>(rest)] == g;
    }
    if (!decomposable) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// The unique minimal generating set of the additive closure of `gens`,
/// ascending. A common divisor is allowed: the result then minimally
/// generates a non-cofinite submonoid.
inline std::vector<i64> minimal_generators(std::span<const i64> gens) {
  detail::validate_generators(gens);
  const i64 g = gcd_of(gens);
  std::vector<i64> reduced;
  reduced.reserve(gens.size());
  for (i64 x : gens) reduced.push_back(x / g);
  auto result = detail::minimal_from_apery(reduced, detail::apery_table(reduced));
  for (i64& x : result) x *= g;
  return result;
}

inline std::vector<i64> minimal_generators(std::initializer_list<i64> gens) {
  return minimal_generators(std::span<const i64>(gens.begin(), gens.size()));
}

/// Sylvester's closed form ab - a - b for the two-generator case.
inline i64 sylvester_frobenius(i64 a, i64 b) {
  if (a < 2 || b <= a) fail(errc::invalid_argument, "need 2 <= a < b");
  if (std::gcd(a, b) != 1) fail(errc::not_coprime, std::to_string(a) + " and " + std::to_string(b));
  return checked::sub(checked::mul(a, b), a + b);
}

/// Immutable numerical semigroup: minimal generators plus the residue-minima
/// table from which membership, Frobenius number and genus are read.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::span<const i64> gens) {
    detail::validate_generators(gens);
    if (gcd_of(gens) != 1)
      fail(errc::gcd_not_one, "gcd of generators is " + std::to_string(gcd_of(gens)) + ", complement would be infinite");
    apery_ = detail::apery_table(gens);
    gens_ = detail::minimal_from_apery(gens, apery_);
    check_working_range();

    const i64 m = multiplicity();
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
    genus_ = 0;
    for (i64 i = 1; i < m; ++i) genus_ += (apery_[static_cast<std::size_t>(i)] - i) / m;
  }

  NumericalSemigroup(std::initializer_list<i64> gens)
      : NumericalSemigroup(std::span<const i64>(gens.begin(), gens.size())) {}

  const std::vector<i64>& generators() const noexcept { return gens_; }
  i64 generator(std::size_t i) const { return gens_.at(i); }
  i64 multiplicity() const noexcept { return gens_.front(); }
  i64 largest_generator() const noexcept { return gens_.back(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  i64 frobenius() const noexcept { return frobenius_; }
  i64 genus() const noexcept { return genus_; }

  bool contains(i64 n) const noexcept {
    if (n < 0) return false;
    if (n == 0) return true;
    return n >= apery_[static_cast<std::size_t>(n % multiplicity())];
  }

  /// Entry i is the least positive member congruent to i mod m(S); entry 0 is m(S).
  std::vector<i64> residue_minima() const {
    std::vector<i64> out = apery_;
    out[0] = multiplicity();
    return out;
  }

  /// Apery set with respect to the multiplicity (entry 0 is 0).
  const std::vector<i64>& apery() const noexcept { return apery_; }

  std::vector<i64> gaps() const {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(genus_));
    for (i64 n = 1; n <= frobenius_; ++n)
      if (!contains(n)) out.push_back(n);
    return out;
  }

  /// 2k * n_2 * n_k^2 + n_1 * n_k, beyond which delta sets repeat with
  /// period n_1 * n_k. Zero for the trivial semigroup.
  i64 delta_period_bound() const noexcept { return delta_bound_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gens_ == b.gens_;
  }

 private:
  void check_working_range() {
    delta_bound_ = 0;
    if (gens_.size() < 2) return;
    const i64 k = static_cast<i64>(gens_.size());
    try {
      i64 nk = gens_.back();
      i64 bound = checked::mul(checked::mul(checked::mul(2 * k, gens_[1]), nk), nk);
      bound = checked::add(bound, checked::mul(gens_.front(), nk));
      if (bound > kWorkingLimit) fail(errc::overflow, "");
      delta_bound_ = bound;
    } catch (const error&) {
      fail(errc::overflow, "derived bound 2k*n2*nk^2 + n1*nk exceeds 2^62");
    }
  }

  std::vector<i64> gens_;
  std::vector<i64> apery_;
  i64 frobenius_ = -1;
  i64 genus_ = 0;
  i64 delta_bound_ = 0;
};

inline std::string to_string(const NumericalSemigroup& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.generators()[i]);
  }
  return out + ">";
}

}  // namespace nsg
