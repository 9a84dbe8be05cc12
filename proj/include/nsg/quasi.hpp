#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsg/error.hpp"
#include "nsg/rational.hpp"

namespace nsg {

/// Outcome of testing value(n) = slope * n + a(n) with a(n) periodic.
struct QuasiProbe {
  bool quasi = false;
  i64 onset = 0;  ///< every sample with n >= onset matches the periodic table
  i64 period = 1;
  Rational slope{0};
  std::vector<std::optional<Rational>> residuals;  ///< a(n) per class n mod period
};

/// Fits the residual value(n) - slope * n per residue class mod `period`
/// (slope forced to 0 for degree 0) and locates the point from which every
/// class is constant. At least three full periods of samples must follow the
/// onset, otherwise errc::insufficient_data.
inline QuasiProbe quasi_probe(const std::vector<std::pair<i64, Rational>>& sequence, i64 period, int degree,
                              Rational slope = Rational{0}) {
  if (sequence.empty()) fail(errc::invalid_argument, "empty sequence");
  if (period < 1) fail(errc::invalid_argument, "period must be positive");
  if (degree != 0 && degree != 1) fail(errc::invalid_argument, "degree must be 0 or 1");
  for (std::size_t i = 1; i < sequence.size(); ++i)
    if (sequence[i].first <= sequence[i - 1].first) fail(errc::invalid_argument, "sequence must be ascending in n");
  if (degree == 0) slope = Rational{0};

  QuasiProbe out;
  out.period = period;
  out.slope = slope;
  out.residuals.assign(static_cast<std::size_t>(period), std::nullopt);

  // Walk backwards: a class's final residual is its last sample's; the onset
  // sits just past the latest sample that disagrees with it.
  i64 onset = sequence.front().first;
  for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
    const auto [n, value] = *it;
    const Rational residual = value - slope * Rational(n);
    auto& slot = out.residuals[static_cast<std::size_t>(mod(n, period))];
    if (!slot) {
      slot = residual;
    } else if (*slot != residual && n + 1 > onset) {
      onset = n + 1;
    }
  }
  const i64 span = sequence.back().first - onset + 1;
  if (span < 3 * period)
    fail(errc::insufficient_data, "only " + std::to_string(span) + " values after onset " + std::to_string(onset) +
                                      ", need " + std::to_string(3 * period));
  out.onset = onset;
  out.quasi = true;
  return out;
}

}  // namespace nsg
