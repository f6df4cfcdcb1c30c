#include "logcap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "logcap/elliptic.hpp"
#include "logcap/errors.hpp"
#include "logcap/optimize.hpp"

namespace logcap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogFloor = 1e-300;

void check_two_interval(double alpha, double beta, const char* op) {
  if (!(alpha > -1.0 && beta < 1.0 && alpha < beta)) {
    std::ostringstream os;
    os << op << ": need -1 < alpha < beta < 1, got (" << alpha << ", " << beta << ")";
    throw DomainError(os.str());
  }
}

void check_spans_unit(const IntervalUnion& e, const char* op) {
  if (e.size() < 2) throw DomainError(std::string(op) + ": needs at least two intervals");
  if (!e.spans_unit()) throw DomainError(std::string(op) + ": set must have hull exactly [-1, 1]");
}

// Accumulates prod base_k^{weight_k} as a sum of logs; any zero base
// makes the whole product zero.
class LogProduct {
 public:
  void add(double base, double weight) {
    if (!(base > 0.0)) {
      zero_ = true;
      return;
    }
    log_sum_ += weight * std::log(std::max(base, kLogFloor));
  }
  double value() const { return zero_ ? 0.0 : std::exp(log_sum_); }

 private:
  double log_sum_ = 0.0;
  bool zero_ = false;
};

}  // namespace

ClassicalBounds classical_bounds(const IntervalUnion& e) {
  if (!e.within_unit()) throw DomainError("classical_bounds: set is not within [-1, 1]");
  return {0.25 * e.measure(), 0.5};
}

double schiefermayr_lower(double alpha, double beta) {
  check_two_interval(alpha, beta, "schiefermayr_lower");
  const double num = std::sqrt(std::sqrt((1.0 - alpha * alpha) * (1.0 - beta * beta)));
  const double den = std::sqrt((1.0 - alpha) * (1.0 + beta)) + std::sqrt((1.0 + alpha) * (1.0 - beta));
  return num / den;
}

double polarization_upper(double alpha, double beta) {
  check_two_interval(alpha, beta, "polarization_upper");
  const double gamma = 0.5 * (beta - alpha);
  return 0.5 * std::sqrt((1.0 - gamma) * (1.0 + gamma));
}

double gillis_upper(double alpha, double beta) {
  check_two_interval(alpha, beta, "gillis_upper");
  const double la = std::log((1.0 + alpha) / 8.0);
  const double lb = std::log((1.0 - beta) / 8.0);
  return 2.0 * std::exp(la * lb / (la + lb));
}

double schiefermayr_upper(double alpha, double beta, SchiefermayrModulus modulus) {
  check_two_interval(alpha, beta, "schiefermayr_upper");
  if (alpha + beta < 0.0) {
    const double a = -beta;
    beta = -alpha;
    alpha = a;
  }
  const double den = (1.0 - alpha) * (1.0 + beta);
  const double ratio = 2.0 * (beta - alpha) / den;
  const double ratio_c = (1.0 + alpha) * (1.0 - beta) / den;
  double k = 0.0;
  double kp = 0.0;
  if (modulus == SchiefermayrModulus::plain) {
    k = ratio;
    kp = std::sqrt(ratio_c * (1.0 + ratio));
  } else {
    k = std::sqrt(ratio);
    kp = std::sqrt(ratio_c);
  }
  if (!(k < 1.0)) throw DomainError("schiefermayr_upper: modulus reached 1");
  const double K = agm_K_from_complement(kp);
  const double E = agm_E(k);
  const double lg = std::log((std::sqrt(2.0) + std::sqrt(1.0 - alpha)) / std::sqrt(1.0 + alpha));
  return (1.0 + alpha) / (2.0 * (1.0 + beta)) * std::exp(2.0 * (E / K - ratio_c) * lg * lg);
}

double beurling_min_cap(double l) {
  if (!(l > 0.0 && l <= 2.0 * kPi)) throw DomainError("beurling_min_cap: l must lie in (0, 2pi]");
  return std::sin(0.25 * l);
}

double haliste_cap(double l, int n) {
  if (!(l > 0.0 && l < 2.0 * kPi)) throw DomainError("haliste_cap: l must lie in (0, 2pi)");
  if (n < 1) throw DomainError("haliste_cap: n must be positive");
  return std::pow(std::sin(0.25 * l), 1.0 / n);
}

double circle_lower(const CircleArcSet& f, const std::vector<double>& sector_angles) {
  if (sector_angles.empty()) throw DomainError("circle_lower: need at least one sector angle");
  for (std::size_t k = 0; k + 1 < sector_angles.size(); ++k)
    if (!(sector_angles[k] < sector_angles[k + 1]))
      throw DomainError("circle_lower: sector angles must increase strictly");
  if (!(sector_angles.back() - sector_angles.front() < 2.0 * kPi))
    throw DomainError("circle_lower: sector angles must span less than 2pi");

  LogProduct prod;
  const std::size_t m = sector_angles.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double from = sector_angles[k];
    const double to = (k + 1 < m) ? sector_angles[k + 1] : sector_angles.front() + 2.0 * kPi;
    const double beta = (to - from) / kPi;
    const double covered = f.length_within(from, to);
    prod.add(std::sin(covered / (2.0 * beta)), 0.5 * beta * beta);
  }
  return prod.value();
}

double partition_lower(const IntervalUnion& e, const Partition& p) {
  if (!e.within_unit()) throw DomainError("partition_lower: set is not within [-1, 1]");
  LogProduct prod;
  for (std::size_t k = 0; k < p.cells(); ++k) {
    const Interval c = p.cell(k);
    const double cell_mu = std::acos(c.lo) - std::acos(c.hi);
    const double part_mu = mu_measure(intersect(e, IntervalUnion::from_intervals({c})));
    prod.add(std::sin(kPi * part_mu / (2.0 * cell_mu)), 2.0 * cell_mu * cell_mu / (kPi * kPi));
  }
  return 0.5 * prod.value();
}

double theorem2_lower(const IntervalUnion& e, const DeltaVector& d) {
  check_spans_unit(e, "theorem2_lower");
  d.check_against(e);
  const std::size_t n = e.size();
  LogProduct prod;
  double theta_prev = kPi;  // acos(delta_0) with delta_0 = -1
  for (std::size_t k = 0; k < n; ++k) {
    const double theta_next = (k + 1 < n) ? std::acos(d.deltas[k]) : 0.0;
    const double span = theta_prev - theta_next;
    const double xb = kPi * (std::acos(e[k].hi) - theta_next) / span;
    const double xa = kPi * (std::acos(e[k].lo) - theta_next) / span;
    // (cos xb - cos xa) / 2 in product form
    prod.add(std::sin(0.5 * (xa + xb)) * std::sin(0.5 * (xa - xb)), span * span / (kPi * kPi));
    theta_prev = theta_next;
  }
  return 0.5 * prod.value();
}

DeltaVector theorem2_equality_deltas(int n) {
  if (n < 2) throw DomainError("theorem2_equality_deltas: n must be at least 2");
  DeltaVector d;
  for (int k = 1; k < n; ++k) d.deltas.push_back(std::cos(kPi * (2.0 * (n - k) - 1.0) / (2.0 * (n - 1))));
  return d;
}

OptimizedLower theorem2_optimize(const IntervalUnion& e) {
  check_spans_unit(e, "theorem2_optimize");
  std::vector<OpenRange> box;
  for (std::size_t i = 0; i < e.gap_count(); ++i) box.push_back({e.gap(i).lo, e.gap(i).hi});
  DeltaVector d;
  d.deltas.resize(box.size());
  auto objective = [&](std::span<const double> x) {
    d.deltas.assign(x.begin(), x.end());
    return theorem2_lower(e, d);
  };
  const GridSearchResult r = grid_maximize(objective, box);
  return {r.value, DeltaVector{r.argmax}, {}};
}

double solynin_lower(const IntervalUnion& e, const DeltaVector& d, const std::vector<double>& gammas) {
  check_spans_unit(e, "solynin_lower");
  d.check_against(e);
  const std::size_t n = e.size();
  if (gammas.size() != n - 2) {
    std::ostringstream os;
    os << "solynin_lower: expected " << n - 2 << " interior points, got " << gammas.size();
    throw DomainError(os.str());
  }
  std::vector<double> pts{-1.0};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0) {
      const double g = gammas[k - 1];
      if (!(g > e[k].lo && g < e[k].hi)) throw DomainError("solynin_lower: interior point outside its component");
      pts.push_back(g);
    }
    pts.push_back(d.deltas[k]);
  }
  pts.push_back(1.0);
  return partition_lower(e, Partition(std::move(pts)));
}

OptimizedLower solynin_optimize(const IntervalUnion& e) {
  check_spans_unit(e, "solynin_optimize");
  const std::size_t n = e.size();
  // Coordinates in increasing order: d_1, g_2, d_2, ..., g_{n-1}, d_{n-1}.
  std::vector<OpenRange> box;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0) box.push_back({e[k].lo, e[k].hi});
    box.push_back({e.gap(k).lo, e.gap(k).hi});
  }
  DeltaVector d;
  std::vector<double> gammas;
  auto unpack = [&](std::span<const double> x) {
    d.deltas.clear();
    gammas.clear();
    for (std::size_t i = 0; i < x.size(); ++i) ((i % 2 == 0) ? d.deltas : gammas).push_back(x[i]);
  };
  auto objective = [&](std::span<const double> x) {
    unpack(x);
    return solynin_lower(e, d, gammas);
  };
  const GridSearchResult r = grid_maximize(objective, box);
  unpack(r.argmax);
  return {r.value, d, gammas};
}

double theorem3_upper(const IntervalUnion& e) {
  check_spans_unit(e, "theorem3_upper");
  const std::size_t n = e.size();
  double gaps_mu = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) gaps_mu += std::acos(e[k].hi) - std::acos(e[k + 1].lo);
  return 0.5 * std::pow(std::cos(0.5 * gaps_mu), 1.0 / static_cast<double>(n - 1));
}

std::string_view to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }

std::vector<BoundReport> all_bounds(const IntervalUnion& e) {
  std::vector<BoundReport> out;
  const ClassicalBounds cb = classical_bounds(e);
  out.push_back({"classical_lower", BoundKind::lower, cb.lower, std::nullopt, std::nullopt});
  out.push_back({"classical_upper", BoundKind::upper, cb.upper, std::nullopt, std::nullopt});
  const std::size_t n = e.size();
  if (n < 2) return out;

  const Partition uniform = Partition::uniform_mu(static_cast<int>(2 * (n - 1)));
  out.push_back({"theorem1_uniform", BoundKind::lower, partition_lower(e, uniform), std::nullopt, uniform});
  if (!e.spans_unit()) return out;

  const OptimizedLower sol = solynin_optimize(e);
  std::vector<double> pts{-1.0};
  for (std::size_t k = 0; k < sol.deltas.deltas.size(); ++k) {
    if (k > 0) pts.push_back(sol.gammas[k - 1]);
    pts.push_back(sol.deltas.deltas[k]);
  }
  pts.push_back(1.0);
  out.push_back({"theorem1_tailored", BoundKind::lower, sol.value, sol.deltas, Partition(std::move(pts))});
  const OptimizedLower t2 = theorem2_optimize(e);
  out.push_back({"theorem2_lower", BoundKind::lower, t2.value, t2.deltas, std::nullopt});
  out.push_back({"theorem3_upper", BoundKind::upper, theorem3_upper(e), std::nullopt, std::nullopt});

  if (n == 2) {
    const double a = e[0].hi;
    const double b = e[1].lo;
    out.push_back({"schiefermayr_lower", BoundKind::lower, schiefermayr_lower(a, b), std::nullopt, std::nullopt});
    out.push_back({"polarization_upper", BoundKind::upper, polarization_upper(a, b), std::nullopt, std::nullopt});
    out.push_back({"gillis_upper", BoundKind::upper, gillis_upper(a, b), std::nullopt, std::nullopt});
    out.push_back({"schiefermayr_upper", BoundKind::upper, schiefermayr_upper(a, b), std::nullopt, std::nullopt});
  }
  return out;
}

}  // namespace logcap
