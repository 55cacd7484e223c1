#pragma once

#include <cmath>
#include <numbers>

namespace enclose {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into the half-open interval [-pi, pi).
inline double wrap_angle(double angle) {
  double shifted = std::fmod(angle + kPi, kTwoPi);
  if (shifted < 0.0) shifted += kTwoPi;
  // fmod of a value just below zero can round up to exactly 2*pi.
  if (shifted >= kTwoPi) shifted = 0.0;
  return shifted - kPi;
}

}  // namespace enclose
