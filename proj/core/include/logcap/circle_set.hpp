#pragma once

#include <span>
#include <vector>

#include "logcap/interval_set.hpp"

namespace logcap {

/// Closed arc of the unit circle from angle `start` counter-clockwise to
/// `end`. start lies in [0, 2pi) and end in (start, start + 2pi], so an
/// arc through angle 0 has end > 2pi.
struct Arc {
  double start;
  double end;

  double length() const noexcept { return end - start; }
};

/// Finite union of pairwise disjoint closed arcs on the unit circle.
class CircleArcSet {
 public:
  /// Canonicalizes starts into [0, 2pi), merges overlapping arcs. Throws
  /// ValidationError for empty input, non-positive or over-long arcs.
  explicit CircleArcSet(std::vector<Arc> arcs);

  static CircleArcSet full_circle();

  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  double total_length() const noexcept;

  /// Length of the part of the set inside the arc [from, to], to > from,
  /// to - from <= 2pi.
  double length_within(double from, double to) const;

  /// Orthogonal projection onto the real axis.
  IntervalUnion project() const;

 private:
  std::vector<Arc> arcs_;
};

/// Conjugation-symmetric preimage F of E (E within [-1, 1]) under
/// orthogonal projection onto the real axis.
CircleArcSet circle_preimage(const IntervalUnion& e);

/// F(l, n): n arcs of length l / n centred at the angles 2 pi j / n.
CircleArcSet canonical_set_F(double l, int n);

}  // namespace logcap
