#pragma once

// Precision-generic kernels shared by the elliptic, theta and exact
// translation units. The public API is double; the two-interval theta
// route runs these in long double so that its double result is correctly
// rounded in the common case.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logcap/errors.hpp"

namespace logcap::detail {

inline constexpr int kMaxAgmIterations = 40;
inline constexpr int kMaxThetaTerms = 100000;

template <class T>
T agm_unit(T g) {
  const T tol = sizeof(T) > sizeof(double) ? T(1e-19) : T(1e-16);
  T a = 1;
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    if (std::abs(a - g) < tol * a) break;
    const T an = (a + g) / 2;
    g = std::sqrt(a * g);
    a = an;
  }
  return a;
}

// K from the complementary modulus.
template <class T>
T complete_K(T k_prime) {
  return std::numbers::pi_v<T> / (2 * agm_unit(k_prime));
}

template <class T>
T carlson_RF(T x, T y, T z) {
  constexpr T errtol = T(0.0008);
  for (int i = 0; i < 200; ++i) {
    const T mean = (x + y + z) / 3;
    const T dx = (mean - x) / mean;
    const T dy = (mean - y) / mean;
    const T dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) {
      const T e2 = dx * dy - dz * dz;
      const T e3 = dx * dy * dz;
      return (1 + (e2 / 24 - T(0.1) - 3 * e3 / 44) * e2 + e3 / 14) / std::sqrt(mean);
    }
    const T sx = std::sqrt(x);
    const T sy = std::sqrt(y);
    const T sz = std::sqrt(z);
    const T lambda = sx * (sy + sz) + sy * sz;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
  }
  throw ConvergenceError("carlson_RF: duplication did not converge", 0.0, 0.0);
}

// Ascending summation with early exit once q^{m^2} < 1e-16 (plus one
// more term in extended precision); q^{m^2} is advanced by the ratio
// q^{2m+1}.
template <class T>
T theta_series(T z, T q, bool alternate) {
  if (q == 0) return 1;
  const T tol = sizeof(T) > sizeof(double) ? T(1e-20) : T(1e-16);
  T sum = 0;
  T qm2 = q;
  T ratio = q * q * q;
  const T q2 = q * q;
  for (int m = 1; m <= kMaxThetaTerms; ++m) {
    T term = qm2 * std::cos(2 * m * z);
    if (alternate && (m & 1)) term = -term;
    sum += term;
    if (qm2 < tol) return 1 + 2 * sum;
    qm2 *= ratio;
    ratio *= q2;
  }
  throw ConvergenceError("theta: series did not converge within the term budget",
                         static_cast<double>(1 + 2 * sum), static_cast<double>(2 * qm2));
}

}  // namespace logcap::detail
