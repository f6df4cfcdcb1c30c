#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "logcap/interval_set.hpp"

namespace logcap {

/// Seeded generator whose output is identical on every platform:
/// std::mt19937_64 is fully specified, and doubles are formed from the top
/// 53 bits instead of going through std::uniform_real_distribution.
class SetSampler {
 public:
  explicit SetSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  int integer(int lo, int hi);            // [lo, hi]

  /// n intervals with hull [-1, 1], every gap >= min_gap and every
  /// component >= min_length.
  IntervalUnion unit_set(int n, double min_gap = 0.05, double min_length = 0.02);

  /// (alpha, beta) with beta - alpha >= min_gap and both components of
  /// [-1, alpha] U [beta, 1] at least min_length long.
  std::pair<double, double> two_interval(double min_gap = 0.05, double min_length = 0.02);

 private:
  std::mt19937_64 engine_;
};

}  // namespace logcap
