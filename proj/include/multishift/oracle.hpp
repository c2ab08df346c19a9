#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multishift/chains.hpp"
#include "multishift/markov.hpp"
#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"

namespace multishift {

/// One analytic-vs-brute-force comparison. `exact` marks integer checks
/// where discrepancy must be identically zero.
struct OracleVerdict {
  std::string check;       ///< which verification ran
  std::string instance;    ///< what it ran on (matrix, n, seed, ...)
  double analytic = 0.0;   ///< value from the closed form / fast path
  double oracle = 0.0;     ///< value recomputed the slow, direct way
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  bool passed = false;
};

/// log2 of a positive big integer, accurate to ~1e-15 relative.
double log2_big(const BigInt& x);

/// Checks count_multiplicative_prefixes against direct enumeration for
/// every n in [1, n_max]. Exact integer comparison. The enumeration prunes
/// on the definitional pair constraint only; it never touches the chain
/// census or the product formula it is checking.
std::vector<OracleVerdict> verify_prefix_counts(const TransferMatrix& A, Index n_max,
                                                std::uint64_t cap = kDefaultEnumerationCap);

/// Empirical box-counting exponents log_m N_n / n at n = 2^l for
/// l = 1..ell_max, each computed from exact big-integer counts and compared
/// against the Minkowski series prediction at the same scale. The two sides
/// share no code: integer census product vs. floating-point series.
std::vector<OracleVerdict> empirical_box_dimension(const TransferMatrix& A, int ell_max);

/// Sums P over all multiplicatively admissible length-n words and checks
/// the total is 1, for every n in [1, n_max].
std::vector<OracleVerdict> verify_measure_normalization(const MarkovMeasure& mu, Index n_max,
                                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Compares the DP entropy path against enumeration-based partition
/// entropy for k in [1, k_max].
std::vector<OracleVerdict> verify_entropy_series(const MarkovMeasure& mu, Index k_max,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Chi-square goodness of fit of sampled words against exact cylinder
/// probabilities. Passes when the survival probability exceeds `alpha`.
OracleVerdict verify_sampler(const MarkovMeasure& mu, Index n, Index count,
                             std::uint64_t seed, double alpha = 1e-3);

}  // namespace multishift
