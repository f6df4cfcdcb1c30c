#pragma once

namespace logcap {

/// theta_3(z; q) = 1 + 2 sum_{m>=1} q^{m^2} cos(2 m z), 0 <= q < 1.
double theta3(double z, double q);

/// theta_4(z; q) = 1 + 2 sum_{m>=1} (-1)^m q^{m^2} cos(2 m z), 0 <= q < 1.
double theta4(double z, double q);

/// Number of series terms summed for nome q before |term| < 1e-16.
int theta_terms(double q);

}  // namespace logcap
