#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace logcap {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint closed intervals on the real line,
/// stored in increasing order with strictly positive gaps between
/// components. Immutable once built.
class IntervalUnion {
 public:
  /// Sorts the pairs, merges overlapping or touching ones, and snaps
  /// endpoints within 1e-14 of +-1 onto +-1. Throws ValidationError on an
  /// empty list, a pair with lo >= hi, or a non-finite endpoint.
  static IntervalUnion from_pairs(std::span<const std::pair<double, double>> pairs);
  static IntervalUnion from_pairs(std::initializer_list<std::pair<double, double>> pairs);
  static IntervalUnion from_intervals(std::vector<Interval> intervals);

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  std::span<const Interval> intervals() const noexcept { return intervals_; }
  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }

  double lower() const noexcept { return intervals_.front().lo; }
  double upper() const noexcept { return intervals_.back().hi; }

  /// Total Lebesgue measure.
  double measure() const noexcept;

  /// Gap i is the open interval (intervals[i].hi, intervals[i+1].lo).
  std::size_t gap_count() const noexcept { return intervals_.size() - 1; }
  Interval gap(std::size_t i) const { return {intervals_[i].hi, intervals_[i + 1].lo}; }
  double min_gap() const noexcept;

  bool contains(double x) const noexcept;
  bool within_unit() const noexcept { return lower() >= -1.0 && upper() <= 1.0; }
  bool spans_unit() const noexcept { return lower() == -1.0 && upper() == 1.0; }

  /// Image under x -> scale * x + shift (scale != 0).
  IntervalUnion affine(double scale, double shift) const;

  /// All 2n endpoints a1, b1, ..., an, bn in increasing order.
  std::vector<double> endpoints() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  explicit IntervalUnion(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}
  std::vector<Interval> intervals_;
};

IntervalUnion make_interval_union(std::span<const std::pair<double, double>> pairs);

/// Set intersection. Point contacts are dropped (measure zero); an empty
/// result is std::nullopt.
std::optional<IntervalUnion> intersect(const IntervalUnion& a, const IntervalUnion& b);

/// mu(e) = integral over e of dx / sqrt(1 - x^2). Requires e within [-1, 1].
double mu_measure(const IntervalUnion& e);
double mu_measure(const std::optional<IntervalUnion>& e);

struct Normalized {
  IntervalUnion set;  // hull is exactly [-1, 1]
  double scale;       // cap(original) = scale * cap(set)
  double center;      // original = scale * set + center
};

/// Affine map sending the hull of E onto [-1, 1].
Normalized normalize_to_unit(const IntervalUnion& e);

/// Orthogonal projection onto the real axis of
/// F(l, n) = { z on the unit circle : |arg z^n| <= l / 2 }.
IntervalUnion canonical_set_E(double l, int n);

/// Division points -1 = t0 < t1 < ... < ts = 1 of [-1, 1].
class Partition {
 public:
  explicit Partition(std::vector<double> points);

  /// Points cos(pi k / s), k = s..0, i.e. s cells of equal mu-measure.
  static Partition uniform_mu(int cells);

  std::size_t cells() const noexcept { return points_.size() - 1; }
  Interval cell(std::size_t k) const { return {points_[k], points_[k + 1]}; }
  std::span<const double> points() const noexcept { return points_; }

 private:
  std::vector<double> points_;
};

/// Gap points delta_1 ... delta_{n-1}, one strictly inside each gap of the
/// associated set.
struct DeltaVector {
  std::vector<double> deltas;

  /// Throws DomainError unless each delta lies strictly inside its gap.
  void check_against(const IntervalUnion& e) const;
};

}  // namespace logcap
