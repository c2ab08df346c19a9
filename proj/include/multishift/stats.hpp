#pragma once

#include <span>

namespace multishift {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
/// a > 0, x >= 0. Series expansion for x < a + 1, Lentz continued fraction
/// otherwise; good to ~1e-14 relative over the range used here.
double regularized_gamma_q(double a, double x);

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom: P[X >= x] = Q(dof/2, x/2).
double chi_square_survival(double x, int dof);

/// Neumaier compensated sum, for normalization checks that need to resolve
/// errors near 1e-15 across millions of terms.
double neumaier_sum(std::span<const double> values);

}  // namespace multishift
