#include "logcap/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "logcap/errors.hpp"
#include "logcap/quadrature.hpp"
#include "kernels.hpp"
#include "logcap/theta.hpp"

namespace logcap {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::akhiezer:
      return "akhiezer";
    case Method::widom:
      return "widom";
  }
  return "unknown";
}

namespace {

constexpr double kDegenerateGap = 1e-6;
constexpr double kRobinTol = 1e-13;
constexpr double kGapTol = 1e-13;

void check_two_interval(double alpha, double beta) {
  if (!(alpha > -1.0 && beta < 1.0 && alpha < beta)) {
    std::ostringstream os;
    os << "two-interval set needs -1 < alpha < beta < 1, got (" << alpha << ", " << beta << ")";
    throw DomainError(os.str());
  }
}

// Integrand data on the real axis to the right of the hull, where q > 0
// and sqrt(q) ~ t^n. `d` holds t^2 p^2 - q with the cancelling leading
// term removed, so that
//   p/sqrt(q) - 1/t = d(t) / (t sqrt(q) (t p + sqrt(q)))
// is evaluated without cancellation.
struct RightTail {
  Polynomial p;
  std::vector<double> endpoints;
  Polynomial d;

  RightTail(Polynomial poly, std::vector<double> pts) : p(std::move(poly)), endpoints(std::move(pts)) {
    Polynomial tp(p.size() + 1, 0.0);
    std::copy(p.begin(), p.end(), tp.begin() + 1);
    d = poly_sub(poly_mul(tp, tp), poly_from_roots(endpoints));
    d.pop_back();  // both terms are monic of degree 2n
  }

  // `offset` is t - endpoints.back(), passed separately for accuracy near
  // the right end of the hull.
  double sqrt_q(double t, double offset) const {
    double prod = offset;
    for (std::size_t j = 0; j + 1 < endpoints.size(); ++j) prod *= (t - endpoints[j]);
    return std::sqrt(prod);
  }
  double sqrt_q(double t) const { return sqrt_q(t, t - endpoints.back()); }

  double robin_integrand(double t, double offset) const {
    const double sq = sqrt_q(t, offset);
    return poly_eval(d, t) / (t * sq * (t * poly_eval(p, t) + sq));
  }

  double robin_integrand(double t) const { return robin_integrand(t, t - endpoints.back()); }

  double green_integrand(double t, double offset) const { return poly_eval(p, t) / sqrt_q(t, offset); }
};

RightTail right_side(const Polynomial& p, const IntervalUnion& unit_set) {
  return RightTail(p, unit_set.endpoints());
}

// Mirror image t -> -t: p~(s) = (-1)^{n-1} p(-s), q~(s) = q(-s).
RightTail left_side(const Polynomial& p, const IntervalUnion& unit_set) {
  Polynomial pm(p.size());
  const double lead_sign = (p.size() % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}, deg p = n-1
  for (std::size_t j = 0; j < p.size(); ++j) pm[j] = lead_sign * ((j % 2 == 0) ? p[j] : -p[j]);
  std::vector<double> pts = unit_set.endpoints();
  for (auto& v : pts) v = -v;
  std::reverse(pts.begin(), pts.end());
  return RightTail(std::move(pm), std::move(pts));
}

// sqrt of the part of q on gap i that excludes the gap's own endpoints,
// signed so that it is positive on the gap.
double gap_complement_sqrt(const std::vector<double>& pts, std::size_t gap, double t) {
  double prod = -1.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == 2 * gap + 1 || j == 2 * gap + 2) continue;
    prod *= (t - pts[j]);
  }
  return std::sqrt(prod);
}

// Green function beyond the right end of the unit hull (x >= 1).
double green_right(const RightTail& side, double robin_unit, double x) {
  if (x == 1.0) return 0.0;
  constexpr double width = 2.0;
  if (x <= 1.0 + width) {
    const double span = x - 1.0;
    auto f = [&](double u) {
      const double off = span * u * u;
      return side.green_integrand(1.0 + off, off) * 2.0 * span * u;
    };
    AdaptiveOptions ao;
    ao.abs_tol = 1e-13;
    return std::max(0.0, integrate_adaptive(f, 0.0, 1.0, ao).value);
  }
  auto h = [&](double t, double off) { return side.robin_integrand(t, off + (x - 1.0)); };
  const double rest = tail_integral(OffsetFunction(h), x, 1e-13).value;
  return std::max(0.0, std::log(x) + robin_unit - rest);
}

}  // namespace

namespace {

using Ext = long double;

struct ExtParams {
  Ext k, k_prime, q, omega;
};

// The whole theta route in extended precision; only the final value is
// rounded to double.
ExtParams akhiezer_params_ext(double alpha, double beta, AkhiezerConvention conv) {
  check_two_interval(alpha, beta);
  const Ext a = alpha;
  const Ext b = beta;
  const Ext den = (1 - a) * (1 + b);
  const Ext ratio = 2 * (b - a) / den;
  const Ext ratio_c = (1 + a) * (1 - b) / den;  // 1 - ratio
  Ext k2 = ratio;
  Ext kp2 = ratio_c;
  if (!conv.modulus_squared) {
    k2 = ratio * ratio;
    kp2 = ratio_c * (1 + ratio);
  }
  ExtParams ep{};
  ep.k = std::sqrt(k2);
  ep.k_prime = std::sqrt(kp2);
  const Ext K = detail::complete_K(ep.k_prime);
  const Ext Kp = detail::complete_K(ep.k);
  ep.q = std::exp(-std::numbers::pi_v<Ext> * Kp / K);
  const Ext lambda = std::sqrt((1 - a) / 2);
  Ext F = 0;
  if (conv.sine_amplitude) {
    const Ext kl = ep.k * lambda;
    F = lambda * detail::carlson_RF<Ext>((1 - lambda) * (1 + lambda), (1 - kl) * (1 + kl), 1);
  } else {
    const Ext s = std::sin(lambda);
    const Ext c = std::cos(lambda);
    const Ext ks = ep.k * s;
    F = s * detail::carlson_RF<Ext>(c * c, (1 - ks) * (1 + ks), 1);
  }
  ep.omega = std::numbers::pi_v<Ext> * F / (2 * K);
  return ep;
}

}  // namespace

EllipticParams akhiezer_params(double alpha, double beta, AkhiezerConvention conv) {
  const ExtParams ep = akhiezer_params_ext(alpha, beta, conv);
  return {static_cast<double>(ep.k), static_cast<double>(ep.k_prime), static_cast<double>(ep.q),
          static_cast<double>(ep.omega)};
}

CapacityResult akhiezer_capacity(double alpha, double beta, AkhiezerConvention conv) {
  const ExtParams ep = akhiezer_params_ext(alpha, beta, conv);
  const Ext ratio = detail::theta_series<Ext>(0, ep.q, true) * detail::theta_series<Ext>(0, ep.q, false) /
                    (detail::theta_series<Ext>(ep.omega, ep.q, true) *
                     detail::theta_series<Ext>(ep.omega, ep.q, false));
  CapacityResult r;
  r.value = static_cast<double>(ratio * ratio / 2);
  r.method = Method::akhiezer;
  r.est_error = 4.0 * std::numeric_limits<double>::epsilon() * r.value;
  r.near_degenerate = (beta - alpha) < kDegenerateGap;
  return r;
}

Polynomial WidomModel::p() const {
  Polynomial poly(coeffs_);
  poly.push_back(1.0);
  return poly;
}

double WidomModel::max_gap_residual() const noexcept {
  double m = 0.0;
  for (double r : residuals_) m = std::max(m, std::abs(r));
  return m;
}

WidomModel WidomModel::with_robin(double robin, double err) const {
  WidomModel copy = *this;
  copy.robin_ = robin;
  copy.robin_error_ = err;
  return copy;
}

WidomModel widom_polynomial(const IntervalUnion& e) {
  Normalized norm = normalize_to_unit(e);
  const IntervalUnion& u = norm.set;
  const std::size_t n = u.size();
  const std::vector<double> pts = u.endpoints();
  Polynomial q = poly_from_roots(pts);

  if (n == 1) return WidomModel(e, std::move(norm), {}, std::move(q), Matrix(0), {});

  const std::size_t s = n - 1;
  Matrix m(s);
  std::vector<double> rhs(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Interval g = u.gap(i);
    for (std::size_t j = 0; j <= s; ++j) {
      auto moment = [&](double t) { return std::pow(t, static_cast<double>(j)) / gap_complement_sqrt(pts, i, t); };
      const double v = gauss_chebyshev_gap_adaptive(moment, g.lo, g.hi).value;
      if (j < s) {
        m(i, j) = v;
      } else {
        rhs[i] = -v;
      }
    }
  }
  std::vector<double> coeffs = solve_dense(m, rhs);

  Polynomial p(coeffs);
  p.push_back(1.0);
  std::vector<double> residuals(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Interval g = u.gap(i);
    auto f = [&](double t) { return poly_eval(p, t) / gap_complement_sqrt(pts, i, t); };
    residuals[i] = gauss_chebyshev_gap_adaptive(f, g.lo, g.hi, 128, kGapTol, 8192).value;
  }
  return WidomModel(e, std::move(norm), std::move(coeffs), std::move(q), std::move(m), std::move(residuals));
}

RobinResult robin_constant(const WidomModel& model) {
  const RightTail side = right_side(model.p(), model.normalized().set);
  auto h = [&](double t, double off) { return side.robin_integrand(t, off); };
  const QuadratureResult r = tail_integral(OffsetFunction(h), 1.0, kRobinTol);
  return {r.value - std::log(model.normalized().scale), r.est_error};
}

CapacityResult widom_capacity(const IntervalUnion& e, bool integrate_single_interval) {
  CapacityResult out;
  out.near_degenerate = e.size() > 1 && e.min_gap() < kDegenerateGap;
  if (e.size() == 1 && !integrate_single_interval) {
    out.value = 0.25 * e[0].length();
    out.method = Method::closed_form;
    out.est_error = std::numeric_limits<double>::epsilon() * out.value;
    return out;
  }
  const WidomModel model = widom_polynomial(e);
  const RobinResult r = robin_constant(model);
  out.value = std::exp(-r.value);
  out.method = Method::widom;
  out.est_error = out.value * r.est_error + model.max_gap_residual();
  return out;
}

double green_value(const WidomModel& model, double x) {
  const Normalized& norm = model.normalized();
  const IntervalUnion& u = norm.set;
  const double xn = (x - norm.center) / norm.scale;
  for (const auto& iv : u) {
    if (xn > iv.lo && xn < iv.hi) throw DomainError("green_value: point lies inside the set");
    if (xn == iv.lo || xn == iv.hi) {
      if (&iv == &u.intervals().front() && xn == iv.lo) return 0.0;
      if (&iv == &u.intervals().back() && xn == iv.hi) return 0.0;
    }
  }
  const Polynomial p = model.p();
  const std::vector<double> pts = u.endpoints();

  auto robin_unit = [&] {
    if (model.robin()) return *model.robin() + std::log(norm.scale);
    return robin_constant(model).value + std::log(norm.scale);
  };

  if (xn >= 1.0) return green_right(right_side(p, u), xn > 3.0 ? robin_unit() : 0.0, xn);
  if (xn <= -1.0) return green_right(left_side(p, u), xn < -3.0 ? robin_unit() : 0.0, -xn);

  // Inside gap i: integrate from its left end b_i with
  // t = b + (x - b) sin^2(pi v / 2), which is smooth at both ends.
  std::size_t gap = 0;
  while (!(xn >= u.gap(gap).lo && xn <= u.gap(gap).hi)) ++gap;
  const double b = u.gap(gap).lo;
  const double a = u.gap(gap).hi;
  if (xn == b) return 0.0;
  const double span = xn - b;
  auto f = [&](double v) {
    const double s = std::sin(0.5 * std::numbers::pi * v);
    const double c = std::cos(0.5 * std::numbers::pi * v);
    const double off = span * s * s;
    const double to_right = (a - xn) + span * c * c;
    const double t = b + off;
    const double sq = std::sqrt(off * to_right) * gap_complement_sqrt(pts, gap, t);
    const double jac = span * std::numbers::pi * s * c;
    return poly_eval(p, t) / sq * jac;
  };
  AdaptiveOptions ao;
  ao.abs_tol = 1e-13;
  return std::abs(integrate_adaptive(f, 0.0, 1.0, ao).value);
}

CapacityResult capacity(const IntervalUnion& e, MethodChoice choice) {
  switch (choice) {
    case MethodChoice::akhiezer: {
      if (e.size() != 2) throw DomainError("akhiezer: the theta formula needs exactly two intervals");
      const Normalized norm = normalize_to_unit(e);
      CapacityResult r = akhiezer_capacity(norm.set[0].hi, norm.set[1].lo);
      r.value *= norm.scale;
      r.est_error *= norm.scale;
      return r;
    }
    case MethodChoice::widom:
      return widom_capacity(e, false);
    case MethodChoice::automatic:
      break;
  }
  if (e.size() == 1) return widom_capacity(e, false);
  if (e.size() == 2) return capacity(e, MethodChoice::akhiezer);
  return widom_capacity(e, false);
}

}  // namespace logcap
