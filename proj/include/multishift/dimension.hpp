#pragma once

#include <optional>
#include <vector>

#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"

namespace multishift {

/// Positive solution of the componentwise system t_i^2 = sum_j A(i,j) t_j,
/// t_i > 1, together with the certified residual max_i |t_i^2 - (A t)_i|.
struct TVector {
  Vector values;
  double residual = 0.0;
  int iterations = 0;
};

/// Solves t_i^2 = sum_j A(i,j) t_j, t_i in (1, m], for primitive A.
///
/// The map t -> componentwise sqrt(A t) is monotone on [1,m]^m and the
/// iterates from the constant vector t = m decrease to the unique fixed
/// point, so plain iteration brackets the solution from above; if it stalls
/// before reaching `tol`, a Newton polish on t*t - At picks up the last
/// digits. The reported residual is recomputed from the final t.
TVector solve_t_system(const TransferMatrix& A, double tol, int max_iter = 1000);

struct HausdorffResult {
  double value = 0.0;
  /// First-order sensitivity of the value to the t-residual:
  /// residual * m / (ln(m) * sum_i t_i).
  double bound = 0.0;
  TVector t;
};

/// (1/2) log_m(sum_i t_i) for primitive A.
HausdorffResult hausdorff_dimension(const TransferMatrix& A, double tol);

struct MinkowskiResult {
  double value = 0.0;  ///< partial sum to depth `depth`; underestimates by <= bound
  double bound = 0.0;  ///< certified tail bound at the chosen depth
  int depth = 0;
};

/// Series value sum_{k>=1} 2^(-k-1) log_m <A^(k-1) 1, 1>, truncated at the
/// smallest depth K whose tail bound
///   sum_{k>K} 2^(-k-1) (1 + (k-1) log_m R) = 2^(-K-1) (1 + (K+1) log_m R),
/// R = max row sum, is <= tol. Word counts enter only through their
/// logarithms, via normalized matrix-vector products with an accumulated
/// log scale, so no big-integer arithmetic and no overflow at any depth.
MinkowskiResult minkowski_dimension(const TransferMatrix& A, double tol);

/// First `depth` partial sums of the same series (monotone nondecreasing).
std::vector<double> minkowski_partial_sums(const TransferMatrix& A, int depth);

/// Exact value of log_m(N_n)/n at n = 2^ell predicted by the series
/// machinery, where N_n counts multiplicatively admissible length-n words:
/// the chain-length census gives
///   log_m(N_n)/n = S_(ell-1) + 2^(-ell) log_m <A^ell 1, 1>
/// with S the partial sums above. Shares no code with exact counting.
double minkowski_scale_rate(const TransferMatrix& A, int ell);

/// Unique root of p^3 = (1-p)^2 in (0,1), by bisection. -log2(p) equals the
/// Hausdorff dimension of the golden-mean system.
double solve_golden_p(double tol);

/// True iff all row sums of A coincide; exactly then the Hausdorff and
/// Minkowski dimensions agree. Requires primitive A.
bool dims_equal_verdict(const TransferMatrix& A);

bool is_golden_matrix(const TransferMatrix& A);

struct DimensionReport {
  double hausdorff = 0.0;
  double hausdorff_bound = 0.0;
  double minkowski = 0.0;
  double minkowski_bound = 0.0;
  bool dims_equal = false;
  std::optional<double> golden_p;  ///< set only for the exact golden-mean matrix
  int series_depth = 0;
  int solver_iterations = 0;
  double solver_residual = 0.0;
  double tol = 0.0;
};

/// Runs both dimension computations at the given tolerance and bundles
/// values, certified bounds, and method metadata.
DimensionReport dimension_report(const TransferMatrix& A, double tol);

}  // namespace multishift
