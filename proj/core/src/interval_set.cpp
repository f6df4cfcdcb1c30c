#include "logcap/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "logcap/circle_set.hpp"
#include "logcap/errors.hpp"

namespace logcap {
namespace {

constexpr double kSnapTol = 1e-14;

double snap_unit(double x) {
  if (std::abs(x - 1.0) <= kSnapTol) return 1.0;
  if (std::abs(x + 1.0) <= kSnapTol) return -1.0;
  return x;
}

void require_unit(const IntervalUnion& e, const char* op) {
  if (!e.within_unit()) {
    std::ostringstream os;
    os << op << ": set [" << e.lower() << ", " << e.upper() << "] is not within [-1, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace

IntervalUnion IntervalUnion::from_intervals(std::vector<Interval> intervals) {
  if (intervals.empty()) throw ValidationError("interval union needs at least one interval");
  for (auto& iv : intervals) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw ValidationError("interval endpoints must be finite");
    if (!(iv.lo < iv.hi)) {
      std::ostringstream os;
      os << "reversed or empty interval [" << iv.lo << ", " << iv.hi << "]";
      throw ValidationError(os.str());
    }
    iv.lo = snap_unit(iv.lo);
    iv.hi = snap_unit(iv.hi);
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  std::vector<Interval> merged;
  merged.reserve(intervals.size());
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return IntervalUnion(std::move(merged));
}

IntervalUnion IntervalUnion::from_pairs(std::span<const std::pair<double, double>> pairs) {
  std::vector<Interval> v;
  v.reserve(pairs.size());
  for (const auto& [a, b] : pairs) v.push_back({a, b});
  return from_intervals(std::move(v));
}

IntervalUnion IntervalUnion::from_pairs(std::initializer_list<std::pair<double, double>> pairs) {
  return from_pairs(std::span<const std::pair<double, double>>(pairs.begin(), pairs.size()));
}

IntervalUnion make_interval_union(std::span<const std::pair<double, double>> pairs) {
  return IntervalUnion::from_pairs(pairs);
}

double IntervalUnion::measure() const noexcept {
  double m = 0.0;
  for (const auto& iv : intervals_) m += iv.length();
  return m;
}

double IntervalUnion::min_gap() const noexcept {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < intervals_.size(); ++i)
    g = std::min(g, intervals_[i + 1].lo - intervals_[i].hi);
  return g;
}

bool IntervalUnion::contains(double x) const noexcept {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x <= it->hi;
}

IntervalUnion IntervalUnion::affine(double scale, double shift) const {
  if (scale == 0.0 || !std::isfinite(scale)) throw DomainError("affine scale must be finite and nonzero");
  std::vector<Interval> v;
  v.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    double x = scale * iv.lo + shift;
    double y = scale * iv.hi + shift;
    if (x > y) std::swap(x, y);
    v.push_back({x, y});
  }
  return from_intervals(std::move(v));
}

std::vector<double> IntervalUnion::endpoints() const {
  std::vector<double> pts;
  pts.reserve(2 * intervals_.size());
  for (const auto& iv : intervals_) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  return pts;
}

std::optional<IntervalUnion> intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].lo, b[j].lo);
    const double hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  if (out.empty()) return std::nullopt;
  return IntervalUnion::from_intervals(std::move(out));
}

double mu_measure(const IntervalUnion& e) {
  require_unit(e, "mu_measure");
  double m = 0.0;
  for (const auto& iv : e) m += std::acos(iv.lo) - std::acos(iv.hi);
  return m;
}

double mu_measure(const std::optional<IntervalUnion>& e) { return e ? mu_measure(*e) : 0.0; }

Normalized normalize_to_unit(const IntervalUnion& e) {
  const double scale = 0.5 * (e.upper() - e.lower());
  const double center = 0.5 * (e.upper() + e.lower());
  std::vector<Interval> v;
  v.reserve(e.size());
  for (const auto& iv : e) v.push_back({(iv.lo - center) / scale, (iv.hi - center) / scale});
  v.front().lo = -1.0;
  v.back().hi = 1.0;
  return {IntervalUnion::from_intervals(std::move(v)), scale, center};
}

IntervalUnion canonical_set_E(double l, int n) {
  if (!(l > 0.0 && l < 2.0 * std::numbers::pi))
    throw DomainError("canonical_set_E: l must lie in (0, 2pi)");
  if (n < 1) throw DomainError("canonical_set_E: n must be positive");
  return canonical_set_F(l, n).project();
}

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("partition needs at least two points");
  for (auto& p : points_) p = snap_unit(p);
  if (points_.front() != -1.0 || points_.back() != 1.0)
    throw ValidationError("partition must start at -1 and end at 1");
  for (std::size_t k = 0; k + 1 < points_.size(); ++k)
    if (!(points_[k] < points_[k + 1])) throw ValidationError("partition points must increase strictly");
}

Partition Partition::uniform_mu(int cells) {
  if (cells < 1) throw DomainError("uniform_mu: at least one cell");
  std::vector<double> pts(static_cast<std::size_t>(cells) + 1);
  for (int k = 0; k <= cells; ++k)
    pts[static_cast<std::size_t>(k)] = -std::cos(std::numbers::pi * k / cells);
  pts.front() = -1.0;
  pts.back() = 1.0;
  return Partition(std::move(pts));
}

void DeltaVector::check_against(const IntervalUnion& e) const {
  if (deltas.size() != e.gap_count()) {
    std::ostringstream os;
    os << "expected " << e.gap_count() << " gap points, got " << deltas.size();
    throw DomainError(os.str());
  }
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const Interval g = e.gap(k);
    if (!(deltas[k] > g.lo && deltas[k] < g.hi)) {
      std::ostringstream os;
      os << "gap point " << deltas[k] << " not inside gap (" << g.lo << ", " << g.hi << ")";
      throw DomainError(os.str());
    }
  }
}

}  // namespace logcap
