#pragma once

// Small seeded generators for property tests. Every property draws from a
// fixed seed so failures replay exactly; the failing case index and values
// are reported through doctest's INFO/CAPTURE.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace hoeckend::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

// Relative error with an absolute floor so values near zero compare sanely.
inline double rel_err(double got, double want, double floor = 1e-12) {
  const double scale = std::max({std::abs(want), std::abs(got), floor});
  return std::abs(got - want) / scale;
}

}  // namespace hoeckend::testing
