#include "logcap/circle_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logcap/errors.hpp"

namespace logcap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

// True when some phi + 2 pi k lies in [s, e].
bool arc_contains(double s, double e, double phi) {
  const double k = std::ceil((s - phi) / kTwoPi);
  return phi + k * kTwoPi <= e;
}

}  // namespace

CircleArcSet::CircleArcSet(std::vector<Arc> arcs) {
  if (arcs.empty()) throw ValidationError("arc set needs at least one arc");
  for (auto& a : arcs) {
    if (!std::isfinite(a.start) || !std::isfinite(a.end))
      throw ValidationError("arc angles must be finite");
    const double len = a.end - a.start;
    if (!(len > 0.0) || len > kTwoPi * (1.0 + 1e-15))
      throw ValidationError("arc length must lie in (0, 2pi]");
    a.start = wrap_angle(a.start);
    a.end = a.start + std::min(len, kTwoPi);
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });

  std::vector<Arc> merged;
  for (const auto& a : arcs) {
    if (!merged.empty() && a.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, a.end);
    } else {
      merged.push_back(a);
    }
  }
  // Wrap-around: the last arc may reach past 2pi into the first one.
  while (merged.size() > 1 && merged.back().end >= merged.front().start + kTwoPi) {
    merged.back().end = std::max(merged.back().end, merged.front().end + kTwoPi);
    merged.erase(merged.begin());
  }
  if (merged.size() == 1 && merged.front().length() >= kTwoPi) merged.front() = {0.0, kTwoPi};
  arcs_ = std::move(merged);
}

CircleArcSet CircleArcSet::full_circle() { return CircleArcSet({{0.0, kTwoPi}}); }

double CircleArcSet::total_length() const noexcept {
  double s = 0.0;
  for (const auto& a : arcs_) s += a.length();
  return s;
}

double CircleArcSet::length_within(double from, double to) const {
  if (!(to > from) || to - from > kTwoPi * (1.0 + 1e-15))
    throw DomainError("length_within: window must have length in (0, 2pi]");
  double s = 0.0;
  for (const auto& a : arcs_) {
    for (int k = -3; k <= 3; ++k) {
      const double lo = std::max(a.start + k * kTwoPi, from);
      const double hi = std::min(a.end + k * kTwoPi, to);
      if (hi > lo) s += hi - lo;
    }
  }
  return s;
}

IntervalUnion CircleArcSet::project() const {
  std::vector<Interval> v;
  v.reserve(arcs_.size());
  for (const auto& a : arcs_) {
    const double cs = std::cos(a.start);
    const double ce = std::cos(a.end);
    const double hi = arc_contains(a.start, a.end, 0.0) ? 1.0 : std::max(cs, ce);
    const double lo = arc_contains(a.start, a.end, std::numbers::pi) ? -1.0 : std::min(cs, ce);
    v.push_back({lo, hi});
  }
  return IntervalUnion::from_intervals(std::move(v));
}

CircleArcSet circle_preimage(const IntervalUnion& e) {
  if (!e.within_unit()) throw DomainError("circle_preimage: set is not within [-1, 1]");
  std::vector<Arc> arcs;
  arcs.reserve(2 * e.size());
  for (const auto& iv : e) {
    const double ta = std::acos(iv.lo);
    const double tb = std::acos(iv.hi);
    arcs.push_back({tb, ta});
    arcs.push_back({kTwoPi - ta, kTwoPi - tb});
  }
  return CircleArcSet(std::move(arcs));
}

CircleArcSet canonical_set_F(double l, int n) {
  if (!(l > 0.0 && l < kTwoPi)) throw DomainError("canonical_set_F: l must lie in (0, 2pi)");
  if (n < 1) throw DomainError("canonical_set_F: n must be positive");
  const double half = l / (2.0 * n);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double c = kTwoPi * j / n;
    arcs.push_back({c - half, c + half});
  }
  return CircleArcSet(std::move(arcs));
}

}  // namespace logcap
