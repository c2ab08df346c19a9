#include "multishift/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace multishift {
namespace {

double residual_of(const Matrix& Ad, const Vector& t) {
  return (t.array().square() - (Ad * t).array()).abs().maxCoeff();
}

/// Streams ln<A^(k-1) 1, 1> for k = 1, 2, ... The vector is renormalized
/// after every product and the scale kept as a log, so arbitrarily deep
/// terms stay in double range.
class LogCountStream {
 public:
  explicit LogCountStream(const TransferMatrix& A)
      : Ad_(A.entries().cast<double>()), v_(Vector::Ones(A.size())) {}

  double next() {
    double value = log_scale_ + std::log(v_.sum());
    v_ = Ad_ * v_;
    double top = v_.maxCoeff();
    v_ /= top;
    log_scale_ += std::log(top);
    return value;
  }

 private:
  Matrix Ad_;
  Vector v_;
  double log_scale_ = 0.0;
};

}  // namespace

TVector solve_t_system(const TransferMatrix& A, double tol, int max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  ensure_primitive(A);
  const Index m = A.size();
  const Matrix Ad = A.entries().cast<double>();

  TVector result;
  Vector t = Vector::Constant(m, static_cast<double>(m));
  int iter = 0;
  // Monotone phase: t -> sqrt(A t) decreases from the constant-m start and
  // stays above the fixed point, so every iterate brackets it from above.
  for (; iter < max_iter; ++iter) {
    double res = residual_of(Ad, t);
    if (res <= tol) {
      result.values = t;
      result.residual = res;
      result.iterations = iter;
      return result;
    }
    Vector next = (Ad * t).cwiseSqrt();
    if (next == t) break;  // stalled at double resolution
    t = next;
  }

  // Newton polish on F(t) = t*t - A t with Jacobian 2 diag(t) - A; picks up
  // the last decimal digits when the plain iteration stalls short of tol.
  for (int k = 0; k < 50 && iter < max_iter; ++k, ++iter) {
    Vector f = t.array().square().matrix() - Ad * t;
    Matrix jac = (2.0 * t).asDiagonal();
    jac -= Ad;
    Vector step = jac.partialPivLu().solve(f);
    Vector next = t - step;
    if (!(next.array() > 0).all() || next == t) break;
    t = next;
    if (residual_of(Ad, t) <= tol) break;
  }

  double res = residual_of(Ad, t);
  if (res > tol) {
    throw NoConvergenceError("t-system residual " + std::to_string(res) +
                                 " still above tol after " + std::to_string(iter) +
                                 " iterations",
                             iter);
  }
  result.values = t;
  result.residual = res;
  result.iterations = iter;
  return result;
}

HausdorffResult hausdorff_dimension(const TransferMatrix& A, double tol) {
  HausdorffResult out;
  out.t = solve_t_system(A, tol);
  const double m = static_cast<double>(A.size());
  const double sum = out.t.values.sum();
  out.value = std::log(sum) / (2.0 * std::log(m));
  out.bound = out.t.residual * m / (std::log(m) * sum);
  return out;
}

MinkowskiResult minkowski_dimension(const TransferMatrix& A, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  ensure_primitive(A);
  const double log_m = std::log(static_cast<double>(A.size()));
  const double logm_R = std::log(static_cast<double>(A.max_row_sum())) / log_m;

  // Terms are bounded by 2^(-k-1) (1 + (k-1) log_m R); summing the bound
  // past depth K gives the certified tail 2^(-K-1) (1 + (K+1) log_m R).
  LogCountStream counts(A);
  MinkowskiResult out;
  constexpr int kMaxDepth = 4000;
  for (int k = 1; k <= kMaxDepth; ++k) {
    out.value += std::ldexp(counts.next() / log_m, -k - 1);
    out.depth = k;
    out.bound = std::ldexp(1.0 + (k + 1) * logm_R, -k - 1);
    if (out.bound <= tol) return out;
  }
  throw NoConvergenceError("series tail bound never reached tol", kMaxDepth);
}

std::vector<double> minkowski_partial_sums(const TransferMatrix& A, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  ensure_primitive(A);
  const double log_m = std::log(static_cast<double>(A.size()));
  LogCountStream counts(A);
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(depth));
  double running = 0.0;
  for (int k = 1; k <= depth; ++k) {
    running += std::ldexp(counts.next() / log_m, -k - 1);
    sums.push_back(running);
  }
  return sums;
}

double minkowski_scale_rate(const TransferMatrix& A, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  ensure_primitive(A);
  const double log_m = std::log(static_cast<double>(A.size()));
  // At n = 2^ell the chain census is exactly 2^(ell-k-1) chains of length k
  // for k < ell plus the single chain through position 1, of length ell+1.
  // Dividing the resulting log-count by n telescopes into the series
  // partial sum S_(ell-1) plus the boundary term below.
  LogCountStream counts(A);
  double rate = 0.0;
  for (int k = 1; k <= ell - 1; ++k) {
    rate += std::ldexp(counts.next() / log_m, -k - 1);
  }
  counts.next();  // length ell does not occur at n = 2^ell
  rate += std::ldexp(counts.next() / log_m, -ell);
  return rate;
}

double solve_golden_p(double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  auto f = [](double p) {
    return p * p * p - (1.0 - p) * (1.0 - p);
  };
  double lo = 0.0, hi = 1.0;  // f(0) = -1 < 0 < 1 = f(1), f increasing
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool dims_equal_verdict(const TransferMatrix& A) {
  ensure_primitive(A);
  return A.equal_row_sums();
}

bool is_golden_matrix(const TransferMatrix& A) {
  return A == TransferMatrix::golden_mean();
}

DimensionReport dimension_report(const TransferMatrix& A, double tol) {
  DimensionReport report;
  report.tol = tol;

  HausdorffResult h = hausdorff_dimension(A, tol);
  report.hausdorff = h.value;
  report.hausdorff_bound = h.bound;
  report.solver_iterations = h.t.iterations;
  report.solver_residual = h.t.residual;

  MinkowskiResult mk = minkowski_dimension(A, tol);
  report.minkowski = mk.value;
  report.minkowski_bound = mk.bound;
  report.series_depth = mk.depth;

  report.dims_equal = dims_equal_verdict(A);
  if (is_golden_matrix(A)) {
    report.golden_p = solve_golden_p(std::min(tol, 1e-13));
  }
  return report;
}

}  // namespace multishift
