#pragma once

namespace logcap {

/// Complete elliptic integral of the first kind K(k), 0 <= k < 1, by the
/// arithmetic-geometric mean: K = pi / (2 agm(1, k')).
double agm_K(double k);

/// K expressed through the complementary modulus k' in (0, 1]. Accurate
/// when k is close to 1 where forming k' = sqrt(1 - k^2) loses digits.
double agm_K_from_complement(double k_prime);

/// Complete elliptic integral of the second kind E(k), 0 <= k <= 1.
double agm_E(double k);

/// Legendre's incomplete integral of the first kind in sine-amplitude form,
/// F(arcsin(lambda), k), for 0 <= lambda <= 1 and k * lambda < 1.
double incomplete_F(double lambda, double k);

/// Same integral with the amplitude phi given directly in radians.
double incomplete_F_amplitude(double phi, double k);

/// Carlson's symmetric integral R_F(x, y, z); at most one argument zero.
double carlson_RF(double x, double y, double z);

/// Nome q = exp(-pi K(k') / K(k)) from k^2 and k'^2 = 1 - k^2 given
/// separately so neither has to be recovered by cancellation.
double nome(double k_squared, double k_prime_squared);

/// Modulus bundle for the two-interval theta formula.
struct EllipticParams {
  double k;
  double k_prime;
  double q;
  double omega;
};

}  // namespace logcap
