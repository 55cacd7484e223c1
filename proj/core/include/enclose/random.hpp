#pragma once

// Seeded random source whose output is identical on every platform.
// The standard distributions are implementation-defined, so uniform draws
// are built directly from the 64-bit Mersenne Twister, which is not.

#include <cstdint>
#include <random>

namespace enclose {

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in the open interval (lo, hi).
  double uniform_open(double lo, double hi) {
    double u = 0.0;
    while (u == 0.0) u = uniform();
    return lo + (hi - lo) * u;
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return lo + static_cast<std::uint64_t>(uniform() * static_cast<double>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace enclose
