#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "nsg/integer.hpp"

namespace nsg {

/// Exact fraction over 64-bit integers, always stored reduced with a
/// positive denominator. Intermediate products go through 128 bits; a result
/// that does not fit back into 64 bits raises errc::overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(i64 value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 num, i64 den) { assign(num, den); }

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::invalid_argument, "division by zero rational");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (num_ == INT64_MIN) fail(errc::overflow, "rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) fail(errc::invalid_argument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) fail(errc::overflow, "rational result exceeds 64 bits");
    Rational r;
    r.num_ = static_cast<i64>(n);
    r.den_ = static_cast<i64>(d);
    return r;
  }

  void assign(i64 num, i64 den) { *this = from_wide(num, den); }

  i64 num_ = 0;
  i64 den_ = 1;
};

}  // namespace nsg
