#include "multishift/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace multishift {
namespace {

constexpr int kMaxGammaIter = 500;
constexpr double kGammaEps = 1e-16;
constexpr double kTiny = 1e-300;

/// Lower regularized gamma P(a,x) by its power series; accurate for x < a+1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n <= kMaxGammaIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Upper regularized gamma Q(a,x) by the Lentz continued fraction;
/// accurate for x >= a+1.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxGammaIter; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("gamma shape must be positive");
  if (!(x >= 0.0)) throw std::domain_error("gamma argument must be nonnegative");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_fraction(a, x);
}

double chi_square_survival(double x, int dof) {
  if (dof < 1) throw std::domain_error("chi-square needs at least 1 degree of freedom");
  return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double neumaier_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

}  // namespace multishift
