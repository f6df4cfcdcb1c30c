#pragma once

#include <functional>

namespace logcap {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  int nodes_used = 0;
};

/// m-point Chebyshev-Gauss rule for the integral over [a, b] of
/// g(t) / sqrt((t - a)(b - t)). Exact for polynomial g of degree < 2m.
/// Throws std::invalid_argument for m < 1, DomainError for a >= b.
double gauss_chebyshev_gap(const RealFunction& g, double a, double b, int m);

/// Node doubling from m0 until two successive rules differ by less than
/// tol, up to m_max nodes. Reports the last difference as est_error, which
/// exceeds tol when the cap was reached.
QuadratureResult gauss_chebyshev_gap_adaptive(const RealFunction& g, double a, double b,
                                              int m0 = 64, double tol = 1e-12, int m_max = 4096);

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 0.0;
  int max_evaluations = 100000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature over [a, b].
/// Never evaluates f at the endpoints. Throws ConvergenceError carrying the
/// partial value when the evaluation budget runs out.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const AdaptiveOptions& opts = {});

struct TailOptions {
  double split_width = 2.0;  // near part covers [b, b + split_width]
  int max_evaluations = 100000;
};

/// Integral of h over [b, infinity) for h = O(1/t^2) at infinity that may
/// carry a 1/sqrt(t - b) singularity at b. The near part uses
/// t = b + W u^2, the far part t = b + W - 1 + 1/s.
QuadratureResult tail_integral(const RealFunction& h, double b, double tol,
                               const TailOptions& opts = {});

/// As above, but h also receives the exact offset t - b, so integrands with
/// a factor (t - b) need not recover it by cancellation near the endpoint.
using OffsetFunction = std::function<double(double t, double offset)>;
QuadratureResult tail_integral(const OffsetFunction& h, double b, double tol,
                               const TailOptions& opts = {});

}  // namespace logcap
