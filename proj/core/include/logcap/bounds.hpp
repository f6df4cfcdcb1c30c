#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcap/circle_set.hpp"
#include "logcap/interval_set.hpp"

namespace logcap {

// Two-interval bounds for E = [-1, alpha] U [beta, 1], -1 < alpha < beta < 1.

/// (mes E) / 4 <= cap E <= 1/2 for E within [-1, 1].
struct ClassicalBounds {
  double lower;
  double upper;
};
ClassicalBounds classical_bounds(const IntervalUnion& e);

double schiefermayr_lower(double alpha, double beta);
double polarization_upper(double alpha, double beta);
double gillis_upper(double alpha, double beta);

enum class SchiefermayrModulus {
  plain,    // k = 2(b - a) / ((1 - a)(1 + b))
  squared,  // k^2 = 2(b - a) / ((1 - a)(1 + b))
};
/// Elliptic-integral upper bound; (alpha, beta) is reflected to (-beta, -alpha)
/// first when alpha + beta < 0.
double schiefermayr_upper(double alpha, double beta,
                          SchiefermayrModulus modulus = SchiefermayrModulus::plain);

// Circle primitives.

/// Minimal capacity sin(l/4) of a closed subset of the circle of length l.
double beurling_min_cap(double l);
/// cap F(l, n) = sin(l/4)^{1/n}, the maximum over unions of n arcs of total length l.
double haliste_cap(double l, int n);

/// Product lower bound over the sectors [s_k, s_{k+1}] (the last one wraps to
/// s_0 + 2pi). `sector_angles` must increase strictly and span less than 2pi.
double circle_lower(const CircleArcSet& f, const std::vector<double>& sector_angles);

// Interval-union bounds on subsets of [-1, 1].

/// 1/2 prod_k sin(pi mu(e_k n E) / (2 mu(e_k)))^{2 mu(e_k)^2 / pi^2}.
double partition_lower(const IntervalUnion& e, const Partition& p);

/// Objective of the gap-point lower bound at fixed gap points. Requires
/// hull [-1, 1], n >= 2, deltas strictly inside the gaps.
double theorem2_lower(const IntervalUnion& e, const DeltaVector& d);

struct OptimizedLower {
  double value;
  DeltaVector deltas;
  std::vector<double> gammas;  // only used by the tailored-partition variant
};

/// Maximizes theorem2_lower over the gap points by a deterministic nested
/// grid search.
OptimizedLower theorem2_optimize(const IntervalUnion& e);

/// Gap points at which theorem2_lower is exact on E(l, 2(n-1)).
DeltaVector theorem2_equality_deltas(int n);

/// The tailored-partition bound: partition_lower at
/// {-1, d_1, g_2, d_2, ..., g_{n-1}, d_{n-1}, 1}. `gammas` holds one point
/// strictly inside each interior component (n - 2 of them).
double solynin_lower(const IntervalUnion& e, const DeltaVector& d, const std::vector<double>& gammas);

/// Co-optimizes gap and interior points on the same grid schedule.
OptimizedLower solynin_optimize(const IntervalUnion& e);

/// 1/2 cos(1/2 sum_k (acos a_{k+1} - acos b_k))^{1/(n-1)}; hull [-1, 1], n >= 2.
double theorem3_upper(const IntervalUnion& e);

enum class BoundKind { lower, upper };
std::string_view to_string(BoundKind k);

struct BoundReport {
  std::string name;
  BoundKind kind;
  double value;
  std::optional<DeltaVector> deltas;
  std::optional<Partition> partition;
};

/// Every bound applicable to E within [-1, 1]. n = 1 gets the classical pair
/// only; the two-interval formulas need n = 2 and hull exactly [-1, 1].
std::vector<BoundReport> all_bounds(const IntervalUnion& e);

}  // namespace logcap
