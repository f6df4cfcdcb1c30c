#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "logcap/elliptic.hpp"
#include "logcap/interval_set.hpp"
#include "logcap/linalg.hpp"

namespace logcap {

enum class Method { closed_form, akhiezer, widom };
std::string_view to_string(Method m);

struct CapacityResult {
  double value = 0.0;
  Method method = Method::closed_form;
  double est_error = 0.0;
  // Set when some gap is narrower than 1e-6; the value is still computed.
  bool near_degenerate = false;
};

/// Which reading of the modulus and of F's first argument the theta formula
/// uses. The defaults are the ones that agree with the polynomial route;
/// the alternatives exist so that agreement can be demonstrated.
struct AkhiezerConvention {
  bool modulus_squared = true;  // k^2 = 2(b - a) / ((1 - a)(1 + b)); else k = that ratio
  bool sine_amplitude = true;   // F(arcsin(lambda), k); else F(lambda, k)
};

EllipticParams akhiezer_params(double alpha, double beta, AkhiezerConvention conv = {});

/// Capacity of [-1, alpha] U [beta, 1] from Jacobi theta functions:
/// cap = 1/2 [theta4(0) theta3(0) / (theta4(omega) theta3(omega))]^2.
CapacityResult akhiezer_capacity(double alpha, double beta, AkhiezerConvention conv = {});

/// The Schwarz-Christoffel data of a finite interval union: monic p of
/// degree n-1 whose integrals against 1/sqrt(q) vanish over every gap.
/// All polynomial data refer to the normalized set with hull [-1, 1].
class WidomModel {
 public:
  const IntervalUnion& set() const noexcept { return set_; }
  const Normalized& normalized() const noexcept { return norm_; }

  /// c_0 ... c_{n-2}; p(t) = t^{n-1} + c_{n-2} t^{n-2} + ... + c_0.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  Polynomial p() const;
  const Polynomial& q() const noexcept { return q_; }

  /// Robin constant of the original set, if computed.
  std::optional<double> robin() const noexcept { return robin_; }
  double robin_error() const noexcept { return robin_error_; }

  /// Gap integrals of p / sqrt(q), recomputed with a finer rule than the
  /// one used to build the system.
  const std::vector<double>& gap_residuals() const noexcept { return residuals_; }
  double max_gap_residual() const noexcept;

  const Matrix& moments() const noexcept { return moments_; }

  WidomModel with_robin(double robin, double err) const;

 private:
  friend WidomModel widom_polynomial(const IntervalUnion& e);
  WidomModel(IntervalUnion set, Normalized norm, std::vector<double> coeffs, Polynomial q,
             Matrix moments, std::vector<double> residuals)
      : set_(std::move(set)),
        norm_(std::move(norm)),
        coeffs_(std::move(coeffs)),
        q_(std::move(q)),
        moments_(std::move(moments)),
        residuals_(std::move(residuals)) {}

  IntervalUnion set_;
  Normalized norm_;
  std::vector<double> coeffs_;
  Polynomial q_;
  Matrix moments_;
  std::vector<double> residuals_;
  std::optional<double> robin_;
  double robin_error_ = 0.0;
};

/// Solves the gap moment system. For n = 1 the polynomial is p = 1.
WidomModel widom_polynomial(const IntervalUnion& e);

struct RobinResult {
  double value;
  double est_error;
};

/// R = integral over [b_n, inf) of p/sqrt(q) - 1/t, for the original set.
RobinResult robin_constant(const WidomModel& model);

/// Capacity by the Schwarz-Christoffel route. n = 1 short-circuits to the
/// closed form (b - a) / 4 unless `integrate_single_interval` is set.
CapacityResult widom_capacity(const IntervalUnion& e, bool integrate_single_interval = false);

/// Green function of the complement with pole at infinity, evaluated at a
/// real point outside the interior of E. Throws DomainError for x inside E.
/// Gap values are integrated from the left end of the gap, so at a right
/// gap end the result is the gap residual.
double green_value(const WidomModel& model, double x);

enum class MethodChoice { automatic, akhiezer, widom };

/// Dispatch: closed form for n = 1, theta formula for n = 2, polynomial route otherwise,
/// unless a method is forced.
CapacityResult capacity(const IntervalUnion& e, MethodChoice choice = MethodChoice::automatic);

}  // namespace logcap
