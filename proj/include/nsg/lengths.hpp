#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/integer.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Length set of one element: distinct factorization lengths ascending,
/// with the successive differences.
struct LengthData {
  i64 element = 0;
  std::vector<i64> lengths;
  i64 min_len = 0;
  i64 max_len = 0;
  std::vector<i64> delta;
};

/// Shortest and longest factorization lengths for every element.
///
/// A coin-change table is filled on [0, n_{k-1} n_k + n_k]. Past n_{k-1} n_k
/// every integer is a member and the minimum (maximum) length grows by one
/// per added n_k (n_1), so larger elements are folded back into the table.
class LengthExtremes {
 public:
  explicit LengthExtremes(const NumericalSemigroup& s, const Budget& budget = {}) : semigroup_(&s) {
    const auto& gens = s.generators();
    const i64 k = static_cast<i64>(gens.size());
    window_ = k >= 2 ? checked::add(checked::mul(gens[gens.size() - 2], gens.back()), gens.back()) : gens.back();
    if (window_ > budget.elements) fail(errc::bound_too_large, "length table window exceeds the element budget");
    const auto size = static_cast<std::size_t>(window_ + 1);
    min_.assign(size, -1);
    max_.assign(size, -1);
    min_[0] = max_[0] = 0;
    for (i64 n = 1; n <= window_; ++n) {
      i64 lo = -1, hi = -1;
      for (i64 g : gens) {
        if (g > n) break;
        auto prev = static_cast<std::size_t>(n - g);
        if (min_[prev] < 0) continue;
        if (lo < 0 || min_[prev] + 1 < lo) lo = min_[prev] + 1;
        if (max_[prev] + 1 > hi) hi = max_[prev] + 1;
      }
      min_[static_cast<std::size_t>(n)] = lo;
      max_[static_cast<std::size_t>(n)] = hi;
    }
  }

  /// Elements above this are resolved through the periodic recurrence.
  i64 recurrence_start() const noexcept {
    const auto& gens = semigroup_->generators();
    return gens.size() >= 2 ? gens[gens.size() - 2] * gens.back() : 0;
  }

  i64 min_length(i64 n) const {
    detail::require_member(*semigroup_, n);
    if (n <= window_) return min_[static_cast<std::size_t>(n)];
    const i64 step = semigroup_->largest_generator();
    const i64 q = ceil_div(n - window_, step);
    return min_[static_cast<std::size_t>(n - q * step)] + q;
  }

  i64 max_length(i64 n) const {
    detail::require_member(*semigroup_, n);
    if (n <= window_) return max_[static_cast<std::size_t>(n)];
    const i64 step = semigroup_->multiplicity();
    const i64 q = ceil_div(n - window_, step);
    return max_[static_cast<std::size_t>(n - q * step)] + q;
  }

 private:
  const NumericalSemigroup* semigroup_;
  i64 window_ = 0;
  std::vector<i64> min_;
  std::vector<i64> max_;
};

inline i64 min_length(const NumericalSemigroup& s, i64 n) { return LengthExtremes(s).min_length(n); }
inline i64 max_length(const NumericalSemigroup& s, i64 n) { return LengthExtremes(s).max_length(n); }

/// Read-only view of one element's length set held as a bitset.
class LengthBits {
 public:
  LengthBits(const std::uint64_t* words, i64 lo_word, i64 hi_word) : words_(words), lo_(lo_word), hi_(hi_word) {}

  bool empty() const noexcept { return hi_ < lo_; }

  bool contains(i64 length) const noexcept {
    const i64 w = length >> 6;
    if (length < 0 || w < lo_ || w > hi_) return false;
    return (words_[w] >> (length & 63)) & 1U;
  }

  std::vector<i64> lengths() const {
    std::vector<i64> out;
    for (i64 w = lo_; w <= hi_; ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        out.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    return out;
  }

  /// Distinct successive differences, ascending. Runs of consecutive
  /// lengths are skipped a word at a time.
  std::vector<i64> deltas() const {
    std::vector<i64> out;
    i64 last = -1;
    i64 pos = next_set(lo_ * 64);
    while (pos >= 0) {
      if (last >= 0) add_unique(out, pos - last);
      const i64 end = next_clear(pos);
      if (end - pos >= 2) add_unique(out, 1);
      last = end - 1;
      pos = next_set(end);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static void add_unique(std::vector<i64>& v, i64 x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }

  i64 next_set(i64 from) const {
    i64 w = from >> 6;
    if (w > hi_) return -1;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w > hi_) return -1;
      word = words_[w];
    }
  }

  // First unset position at or after `from` (which must be set).
  i64 next_clear(i64 from) const {
    i64 w = from >> 6;
    std::uint64_t word = ~words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w > hi_) return w * 64;
      word = ~words_[w];
    }
  }

  const std::uint64_t* words_;
  i64 lo_;
  i64 hi_;
};

/// Streams the length set of every n in [0, n_max] in ascending order using
///   L(n) = union over generators g <= n of (L(n - g) + 1),
/// keeping only the last n_k + 1 sets alive. `visit(n, LengthBits)` is
/// called for every n, members and gaps alike (gaps see an empty set).
template <typename Visit>
void sweep_length_sets(const NumericalSemigroup& s, i64 n_max, Visit&& visit, const Budget& budget = {}) {
  if (n_max < 0) return;
  if (n_max > budget.elements)
    fail(errc::bound_too_large, "scan to " + std::to_string(n_max) + " exceeds the element budget " +
                                    std::to_string(budget.elements));
  const auto& gens = s.generators();
  const i64 slots = s.largest_generator() + 1;
  const i64 words = n_max / s.multiplicity() / 64 + 2;
  std::vector<std::uint64_t> storage(static_cast<std::size_t>(slots * words), 0);
  std::vector<i64> lo(static_cast<std::size_t>(slots), 1), hi(static_cast<std::size_t>(slots), 0);

  for (i64 n = 0; n <= n_max; ++n) {
    const auto slot = static_cast<std::size_t>(n % slots);
    std::uint64_t* dst = storage.data() + slot * static_cast<std::size_t>(words);
    for (i64 w = lo[slot]; w <= hi[slot]; ++w) dst[w] = 0;
    i64 dlo = words, dhi = -1;
    if (n == 0) {
      dst[0] = 1;
      dlo = dhi = 0;
    } else if (s.contains(n)) {
      for (i64 g : gens) {
        if (g > n) break;
        const auto src_slot = static_cast<std::size_t>((n - g) % slots);
        const i64 slo = lo[src_slot], shi = hi[src_slot];
        if (shi < slo) continue;
        const std::uint64_t* src = storage.data() + src_slot * static_cast<std::size_t>(words);
        // Shift by one: every length grows by the added generator.
        for (i64 w = slo; w <= shi + 1; ++w) {
          const std::uint64_t carry = w > slo ? src[w - 1] >> 63 : 0;
          const std::uint64_t body = w <= shi ? src[w] << 1 : 0;
          dst[w] |= body | carry;
        }
        dlo = std::min(dlo, slo);
        dhi = std::max(dhi, dst[shi + 1] ? shi + 1 : shi);
      }
      while (dlo <= dhi && dst[dlo] == 0) ++dlo;
      while (dhi >= dlo && dst[dhi] == 0) --dhi;
    }
    lo[slot] = dlo;
    hi[slot] = dhi;
    visit(n, LengthBits(dst, dlo, dhi));
  }
}

inline LengthData make_length_data(i64 n, std::vector<i64> lengths) {
  LengthData data;
  data.element = n;
  data.lengths = std::move(lengths);
  data.min_len = data.lengths.front();
  data.max_len = data.lengths.back();
  for (std::size_t i = 1; i < data.lengths.size(); ++i) {
    const i64 d = data.lengths[i] - data.lengths[i - 1];
    if (std::find(data.delta.begin(), data.delta.end(), d) == data.delta.end()) data.delta.push_back(d);
  }
  std::sort(data.delta.begin(), data.delta.end());
  return data;
}

/// L(n) with its extremes and delta set.
inline LengthData length_set(const NumericalSemigroup& s, i64 n, const Budget& budget = {}) {
  detail::require_member(s, n);
  std::vector<i64> lengths;
  sweep_length_sets(
      s, n,
      [&](i64 m, const LengthBits& bits) {
        if (m == n) lengths = bits.lengths();
      },
      budget);
  return make_length_data(n, std::move(lengths));
}

/// Distinct successive differences of L(n); empty for a single length.
inline std::vector<i64> delta_element(const NumericalSemigroup& s, i64 n, const Budget& budget = {}) {
  return length_set(s, n, budget).delta;
}

/// Number of elements having a factorization of exactly `length` generators.
/// Such elements lie in [n_1 * length, n_k * length]; the set reachable with
/// exactly j generators is grown one generator at a time.
inline i64 count_by_length(const NumericalSemigroup& s, i64 length, const Budget& budget = {}) {
  if (length < 1) fail(errc::invalid_argument, "length must be at least 1");
  const i64 top = checked::mul(s.largest_generator(), length);
  const i64 span = checked::add(checked::mul(s.largest_generator() - s.multiplicity(), length), 1);
  if (span > budget.elements || top > budget.elements)
    fail(errc::bound_too_large, "length scan exceeds the element budget");
  std::vector<char> current(static_cast<std::size_t>(top + 1), 0), next(current.size(), 0);
  current[0] = 1;
  for (i64 j = 1; j <= length; ++j) {
    std::fill(next.begin(), next.end(), 0);
    const i64 lo = (j - 1) * s.multiplicity(), hi = (j - 1) * s.largest_generator();
    for (i64 x = lo; x <= hi; ++x) {
      if (!current[static_cast<std::size_t>(x)]) continue;
      for (i64 g : s.generators()) next[static_cast<std::size_t>(x + g)] = 1;
    }
    current.swap(next);
  }
  return std::count(current.begin(), current.end(), char{1});
}

}  // namespace nsg
