#include "logcap/random_sets.hpp"

#include <stdexcept>
#include <vector>

namespace logcap {

double SetSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SetSampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SetSampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

IntervalUnion SetSampler::unit_set(int n, double min_gap, double min_length) {
  if (n < 1) throw std::invalid_argument("unit_set: n must be positive");
  const double free = 2.0 - n * min_length - (n - 1) * min_gap;
  if (!(free > 0.0)) throw std::invalid_argument("unit_set: minimum sizes exceed [-1, 1]");
  // Pieces alternate component, gap, component, ...; the free length is
  // shared out in proportion to uniform weights.
  std::vector<double> w(static_cast<std::size_t>(2 * n - 1));
  double total = 0.0;
  for (auto& x : w) {
    x = 0.05 + uniform();
    total += x;
  }
  std::vector<std::pair<double, double>> pairs;
  double pos = -1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double base = (i % 2 == 0) ? min_length : min_gap;
    const double next = pos + base + free * w[i] / total;
    if (i % 2 == 0) pairs.emplace_back(pos, next);
    pos = next;
  }
  pairs.back().second = 1.0;
  return IntervalUnion::from_pairs(pairs);
}

std::pair<double, double> SetSampler::two_interval(double min_gap, double min_length) {
  const double alpha = uniform(-1.0 + min_length, 1.0 - min_length - min_gap);
  const double beta = uniform(alpha + min_gap, 1.0 - min_length);
  return {alpha, beta};
}

}  // namespace logcap
