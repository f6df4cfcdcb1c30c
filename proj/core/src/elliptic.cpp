#include "logcap/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "logcap/errors.hpp"
#include "kernels.hpp"

namespace logcap {

double agm_K_from_complement(double k_prime) {
  if (!(k_prime > 0.0 && k_prime <= 1.0))
    throw DomainError("agm_K: complementary modulus must lie in (0, 1]");
  return detail::complete_K(k_prime);
}

double agm_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("agm_K: modulus must lie in [0, 1)");
  return agm_K_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

double agm_E(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("agm_E: modulus must lie in [0, 1]");
  if (k == 1.0) return 1.0;
  // E = K (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0 = k, c_{n+1} = (a_n - g_n) / 2.
  double a = 1.0;
  double g = std::sqrt((1.0 - k) * (1.0 + k));
  double c = k;
  double pow2 = 0.5;
  double sum = pow2 * c * c;
  for (int i = 0; i < detail::kMaxAgmIterations; ++i) {
    if (std::abs(a - g) < 1e-16 * a) break;
    c = 0.5 * (a - g);
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return std::numbers::pi / (2.0 * a) * (1.0 - sum);
}

double carlson_RF(double x, double y, double z) {
  if (x < 0.0 || y < 0.0 || z < 0.0) throw DomainError("carlson_RF: negative argument");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1) throw DomainError("carlson_RF: two zero arguments");
  return detail::carlson_RF(x, y, z);
}

double incomplete_F(double lambda, double k) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("incomplete_F: lambda must lie in [0, 1]");
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("incomplete_F: modulus must lie in [0, 1)");
  if (lambda == 0.0) return 0.0;
  if (lambda == 1.0) return agm_K(k);
  const double kl = k * lambda;
  return lambda * carlson_RF((1.0 - lambda) * (1.0 + lambda), (1.0 - kl) * (1.0 + kl), 1.0);
}

double incomplete_F_amplitude(double phi, double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("incomplete_F: modulus must lie in [0, 1)");
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2))
    throw DomainError("incomplete_F: amplitude must lie in [0, pi/2]");
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double ks = k * s;
  return s * carlson_RF(c * c, (1.0 - ks) * (1.0 + ks), 1.0);
}

double nome(double k_squared, double k_prime_squared) {
  if (!(k_squared > 0.0 && k_prime_squared > 0.0))
    throw DomainError("nome: modulus must lie strictly inside (0, 1)");
  const double k = std::sqrt(k_squared);
  const double kp = std::sqrt(k_prime_squared);
  return std::exp(-std::numbers::pi * agm_K_from_complement(k) / agm_K_from_complement(kp));
}

}  // namespace logcap
