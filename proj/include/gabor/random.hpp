#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gabor/group.hpp"

namespace gabor {

// Seeded complex-normal window source.  Box-Muller over raw mt19937_64 bits
// keeps the stream identical across standard libraries, so reports quoting a
// seed are reproducible bit-for-bit.
class WindowSampler {
 public:
  explicit WindowSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() {  // (0, 1)
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  cd complex_normal() {
    const double r = std::sqrt(-std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

  Window window(const GroupSpec& spec) {
    Window w = zero_window(spec);
    for (long i = 0; i < spec.order(); ++i) w.values[i] = complex_normal();
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gabor
