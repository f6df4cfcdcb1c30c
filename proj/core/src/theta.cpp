#include "logcap/theta.hpp"

#include "kernels.hpp"
#include "logcap/errors.hpp"

namespace logcap {
namespace {

void check_nome(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("theta: nome must lie in [0, 1)");
}

}  // namespace

double theta3(double z, double q) {
  check_nome(q);
  return detail::theta_series(z, q, false);
}

double theta4(double z, double q) {
  check_nome(q);
  return detail::theta_series(z, q, true);
}

int theta_terms(double q) {
  check_nome(q);
  if (q == 0.0) return 0;
  double qm2 = q;
  double ratio = q * q * q;
  for (int m = 1; m <= detail::kMaxThetaTerms; ++m) {
    if (qm2 < 1e-16) return m;
    qm2 *= ratio;
    ratio *= q * q;
  }
  return detail::kMaxThetaTerms;
}

}  // namespace logcap
