#pragma once

#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Factorization lengths of one element counted with repetition.
struct LengthMultiset {
  i64 element = 0;
  std::map<i64, i64> counts;  ///< length -> multiplicity
  i64 total = 0;              ///< equals |Z(n)|
};

inline LengthMultiset length_multiset(const NumericalSemigroup& s, i64 n) {
  LengthMultiset out;
  out.element = n;
  for_each_factorization(s, n, [&](std::span<const i64> e) {
    i64 len = 0;
    for (i64 x : e) len += x;
    ++out.counts[len];
    ++out.total;
  });
  return out;
}

inline Rational mean_length(const LengthMultiset& multiset) {
  __int128 sum = 0;
  for (auto [len, mult] : multiset.counts) sum += static_cast<__int128>(len) * mult;
  if (sum > INT64_MAX) fail(errc::overflow, "length sum exceeds 64 bits");
  return Rational(static_cast<i64>(sum), multiset.total);
}

/// Middle of the sorted multiset; the two middle values are averaged when
/// the total is even.
inline Rational median_length(const LengthMultiset& multiset) {
  const i64 total = multiset.total;
  auto nth = [&](i64 index) {
    i64 seen = 0;
    for (auto [len, mult] : multiset.counts) {
      seen += mult;
      if (index < seen) return len;
    }
    fail(errc::internal, "median index out of range");
  };
  if (total % 2 == 1) return Rational(nth(total / 2));
  return Rational(nth(total / 2 - 1) + nth(total / 2), 2);
}

inline Rational mean_length(const NumericalSemigroup& s, i64 n) {
  if (n == 0) fail(errc::zero_element, "mean length is taken over nonzero elements");
  return mean_length(length_multiset(s, n));
}

inline Rational median_length(const NumericalSemigroup& s, i64 n) {
  if (n == 0) fail(errc::zero_element, "median length is taken over nonzero elements");
  return median_length(length_multiset(s, n));
}

/// Limit of mean length over n: the average of 1/n_i.
inline Rational mean_asymptote(const NumericalSemigroup& s) {
  Rational sum{0};
  for (i64 g : s.generators()) sum += Rational(1, g);
  return sum / Rational(static_cast<i64>(s.embedding_dimension()));
}

namespace detail {
inline void require_three_generated(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 3)
    fail(errc::not_three_generated, to_string(s) + " has embedding dimension " +
                                         std::to_string(s.embedding_dimension()));
}
}  // namespace detail

/// n_1 (n_3 - n_2) / (n_2 (n_3 - n_1)).
inline Rational fulcrum(const NumericalSemigroup& s) {
  detail::require_three_generated(s);
  const i64 a = s.generator(0), b = s.generator(1), c = s.generator(2);
  return Rational(checked::mul(a, c - b), checked::mul(b, c - a));
}

struct MedianAsymptote {
  Rational fulcrum;
  double value = 0.0;
};

/// Limit of median length over n for a three-generated semigroup. The branch
/// is picked by the fulcrum constant; both agree at 1/2.
inline MedianAsymptote median_asymptote(const NumericalSemigroup& s) {
  const Rational f = fulcrum(s);
  const double fd = f.to_double();
  const double n1 = static_cast<double>(s.generator(0));
  const double n3 = static_cast<double>(s.generator(2));
  double value;
  if (f <= Rational(1, 2)) {
    const double r = std::sqrt((1.0 - fd) / 2.0);
    value = (1.0 - r) / n1 + r / n3;
  } else {
    const double r = std::sqrt(fd / 2.0);
    value = r / n1 + (1.0 - r) / n3;
  }
  return {f, value};
}

}  // namespace nsg
