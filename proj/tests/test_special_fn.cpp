#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "logcap/elliptic.hpp"
#include "logcap/errors.hpp"
#include "logcap/linalg.hpp"
#include "logcap/quadrature.hpp"
#include "logcap/theta.hpp"
#include "oracles.hpp"

using namespace logcap;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
const double moduli[] = {0.0, 0.1, 0.3, 0.5, 1 / std::sqrt(2.0), 0.8, 0.9, 0.95, 0.99};
}  // namespace

TEST_CASE("complete integrals match trapezoid oracle") {
  for (double k : moduli) {
    CAPTURE(k);
    CHECK(agm_K(k) == Approx(double(oracle::K(k))).epsilon(4e-16));
    CHECK(agm_E(k) == Approx(double(oracle::E(k))).epsilon(4e-16));
  }
  CHECK(agm_K(0.0) == Approx(pi / 2).epsilon(1e-16));
  CHECK(agm_E(1.0) == 1.0);
  CHECK(agm_K(1 / std::sqrt(2.0)) == Approx(1.8540746773013719).epsilon(3e-16));
  CHECK(agm_K(0.99) == Approx(3.3566005233611924).epsilon(3e-16));
  CHECK(agm_E(0.6) == Approx(1.4180833944487242).epsilon(3e-16));
}

TEST_CASE("K from the complementary modulus") {
  for (double kp : {1.0, 0.5, 0.1}) {
    const long double k = std::sqrt(1.0L - (long double)kp * kp);
    CAPTURE(kp);
    CHECK(agm_K_from_complement(kp) == Approx(double(oracle::K(k))).epsilon(1e-15));
  }
  // Near k = 1: K = L + (k'^2 / 4)(L - 1) + (9 k'^4 / 64)(L - 7/6) + O(k'^6 L), L = ln(4 / k').
  for (double kp : {1e-3, 1e-8}) {
    const double L = std::log(4 / kp);
    CHECK(agm_K_from_complement(kp) == Approx(L + 0.25 * kp * kp * (L - 1) + 9.0 / 64 * std::pow(kp, 4) * (L - 7.0 / 6)).epsilon(1e-15));
  }
}

TEST_CASE("Legendre relation") {
  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double kp = std::sqrt(1 - k * k);
    const double lhs = agm_E(k) * agm_K(kp) + agm_E(kp) * agm_K(k) - agm_K(k) * agm_K(kp);
    CHECK(lhs == Approx(pi / 2).epsilon(1e-15));
  }
}

TEST_CASE("incomplete integral of the first kind") {
  for (double k : {0.0, 0.3, 0.5, 0.9, 0.99}) {
    for (double lambda : {0.0, 0.1, 0.5, 0.8, 0.999}) {
      CAPTURE(k);
      CAPTURE(lambda);
      const double phi = std::asin(lambda);
      const double want = double(oracle::F(std::asin((oracle::real)lambda), k));
      CHECK(incomplete_F(lambda, k) == Approx(want).epsilon(1e-15));
      CHECK(incomplete_F_amplitude(phi, k) == Approx(want).epsilon(1e-15));
    }
    CHECK(incomplete_F(1.0, k) == Approx(agm_K(k)).epsilon(1e-15));
  }
  CHECK(incomplete_F(0.5, 0.5) == Approx(0.5294286270519058).epsilon(1e-15));
  CHECK(incomplete_F(0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(incomplete_F(1.1, 0.5), DomainError);
  CHECK_THROWS_AS(incomplete_F(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(incomplete_F_amplitude(2.0, 0.5), DomainError);
}

TEST_CASE("Carlson R_F identities") {
  CHECK(carlson_RF(2, 2, 2) == Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  // K(k) = R_F(0, 1 - k^2, 1).
  CHECK(carlson_RF(0, 0.5, 1) == Approx(agm_K(1 / std::sqrt(2.0))).epsilon(1e-15));
  // Homogeneity of degree -1/2 and symmetry.
  const double v = carlson_RF(0.3, 1.7, 2.9);
  CHECK(carlson_RF(4 * 0.3, 4 * 1.7, 4 * 2.9) == Approx(v / 2).epsilon(1e-15));
  CHECK(carlson_RF(2.9, 0.3, 1.7) == Approx(v).epsilon(1e-15));
  CHECK_THROWS_AS(carlson_RF(-1, 1, 1), DomainError);
  CHECK_THROWS_AS(carlson_RF(0, 0, 1), DomainError);
}

TEST_CASE("nome") {
  const double k2 = 0.5;
  CHECK(nome(k2, 1 - k2) == Approx(std::exp(-pi)).epsilon(1e-15));
  for (double k : {0.2, 0.6, 0.95}) {
    const double kp = std::sqrt(1 - k * k);
    CHECK(nome(k * k, kp * kp) == Approx(std::exp(-pi * double(oracle::K(kp) / oracle::K(k)))).epsilon(1e-14));
  }
  CHECK_THROWS_AS(nome(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(nome(1.0, 0.0), DomainError);
}

TEST_CASE("theta functions against triple products") {
  for (double q : {0.0, 0.01, 0.1, 0.5, 0.9}) {
    for (double z : {0.0, 0.3, 1.0, 2.5}) {
      CAPTURE(q);
      CAPTURE(z);
      const double tol = q < 0.6 ? 1e-15 : 1e-13;
      CHECK(theta3(z, q) == Approx(double(oracle::theta3(z, q))).epsilon(tol));
      CHECK(theta4(z, q) == Approx(double(oracle::theta4(z, q))).epsilon(tol));
    }
  }
  // Correctly rounded values of 1 +- 2(q + q^4 + q^9 + q^16).
  CHECK(theta3(0.0, 0.1) == 1.20020000200000021115);
  CHECK(theta4(0.0, 0.1) == 0.80019999800000018894);
  CHECK(theta3(0.0, 0.0) == 1.0);
  CHECK(theta_terms(0.0) == 0);
  CHECK(theta_terms(0.1) < theta_terms(0.9));
  CHECK_THROWS_AS(theta3(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(theta4(0.0, -0.1), DomainError);
}

TEST_CASE("theta functions are pi-periodic and even") {
  for (double z : {0.2, 1.1}) {
    CHECK(theta3(z + pi, 0.3) == Approx(theta3(z, 0.3)).epsilon(1e-14));
    CHECK(theta4(-z, 0.3) == Approx(theta4(z, 0.3)).epsilon(1e-15));
  }
}

TEST_CASE("Gauss-Chebyshev is exact below degree 2m") {
  const double a = -0.3, b = 0.7;
  for (int m : {1, 2, 5, 9}) {
    for (int deg = 0; deg < 2 * m; ++deg) {
      auto g = [deg](double t) { return std::pow(t, deg); };
      const double want = double(oracle::integrate(
          [deg, a, b](oracle::real th) {
            const oracle::real t = 0.5L * (a + b) + 0.5L * (b - a) * std::cos(th);
            return std::pow(t, deg);
          },
          0, oracle::pi));
      CAPTURE(m);
      CAPTURE(deg);
      CHECK(gauss_chebyshev_gap(g, a, b, m) == Approx(want).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(gauss_chebyshev_gap([](double) { return 1.0; }, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_chebyshev_gap([](double) { return 1.0; }, 1, 0, 4), DomainError);
}

TEST_CASE("adaptive Gauss-Chebyshev") {
  const auto r = gauss_chebyshev_gap_adaptive([](double t) { return std::exp(t); }, 0, 1);
  // int_0^1 e^t / sqrt(t(1-t)) dt = pi e^{1/2} I_0(1/2).
  CHECK(r.value == Approx(pi * std::exp(0.5) * std::cyl_bessel_i(0.0, 0.5)).epsilon(1e-14));
  CHECK(r.est_error < 1e-12);
  // A cap that is too small reports a large error instead of throwing.
  const auto capped = gauss_chebyshev_gap_adaptive([](double t) { return 1 / (t + 1e-3); }, 0, 1, 4, 1e-14, 16);
  CHECK(capped.est_error > 1e-14);
}

TEST_CASE("Gauss-Kronrod adaptive integration") {
  const auto r = integrate_adaptive([](double t) { return std::log(t); }, 0, 1);
  CHECK(r.value == Approx(-1.0).epsilon(1e-13));
  const auto s = integrate_adaptive([](double t) { return std::sin(t); }, 0, pi);
  CHECK(s.value == Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_adaptive([](double t) { return 1 / std::sqrt(std::abs(t - 0.3)); }, 0, 1,
                                     AdaptiveOptions{1e-15, 0, 200}),
                  ConvergenceError);
}

TEST_CASE("tail integrals") {
  // int_1^inf dt / (t sqrt(t - 1)) = pi.
  const auto r = tail_integral([](double t) { return 1 / (t * std::sqrt(t - 1)); }, 1.0, 1e-13);
  CHECK(r.value == Approx(pi).epsilon(1e-13));
  const auto o = tail_integral([](double t, double off) { return 1 / (t * std::sqrt(off)); }, 1.0, 1e-13);
  CHECK(o.value == Approx(pi).epsilon(1e-14));
  CHECK_THROWS_AS(tail_integral([](double t) { return 1 / (t * t); }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("dense solve and polynomials") {
  Matrix m(3, {4, -2, 1, -2, 4, -2, 1, -2, 4});
  const std::vector<double> x{1, 2, 3};
  const auto b = m.multiply(x);
  const auto y = solve_dense(m, b);
  for (int i = 0; i < 3; ++i) CHECK(y[i] == Approx(x[i]).epsilon(1e-14));
  Matrix sing(2, {1, 2, 2, 4});
  CHECK_THROWS_AS(solve_dense(sing, {1, 2}), SingularMatrixError);

  const std::vector<double> roots{-1, 0.5, 2};
  const Polynomial p = poly_from_roots(roots);
  CHECK(p.size() == 4);
  CHECK(p.back() == 1.0);
  for (double r : roots) CHECK(poly_eval(p, r) == Approx(0.0).epsilon(1e-15));
  const Polynomial sq = poly_mul({1, 1}, {-1, 1});
  CHECK(poly_eval(poly_sub(sq, {-1, 0, 1}), 3.7) == Approx(0.0));
}
