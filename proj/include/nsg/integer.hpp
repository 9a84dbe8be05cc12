#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

using i64 = std::int64_t;

/// Upper limit for every derived quantity kept in 64-bit form.
inline constexpr i64 kWorkingLimit = i64{1} << 62;

namespace checked {

inline i64 add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer addition overflow");
  return out;
}

inline i64 sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out)) fail(errc::overflow, "integer subtraction overflow");
  return out;
}

inline i64 mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer multiplication overflow");
  return out;
}

inline i64 pow(i64 base, int exponent) {
  i64 out = 1;
  for (int i = 0; i < exponent; ++i) out = mul(out, base);
  return out;
}

}  // namespace checked

inline i64 gcd_of(std::span<const i64> values) {
  i64 g = 0;
  for (i64 v : values) g = std::gcd(g, v);
  return g;
}

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

/// Non-negative remainder.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1.
inline i64 mod_inverse(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) fail(errc::not_coprime, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(old_s, m);
}

}  // namespace nsg
