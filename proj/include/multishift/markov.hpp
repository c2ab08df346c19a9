#pragma once

#include <cstdint>
#include <vector>

#include "multishift/chains.hpp"
#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"
#include "multishift/word.hpp"

namespace multishift {

/// A Markov measure on the words of a transfer matrix: an initial
/// distribution plus a row-stochastic transition matrix whose positive
/// entries sit on allowed pairs only. Rows of A with a single allowed
/// successor force that transition with probability 1.
class MarkovMeasure {
 public:
  MarkovMeasure(TransferMatrix support, Vector initial, Matrix transitions);

  /// The one-parameter family on the golden-mean matrix: initial (p, 1-p),
  /// transitions ((p, 1-p), (1, 0)).
  static MarkovMeasure golden(double p);

  /// Uniform initial distribution, each row uniform over its allowed
  /// successors. On the full shift this is the uniform Bernoulli measure.
  static MarkovMeasure uniform_on_support(TransferMatrix support);

  Index size() const noexcept { return initial_.size(); }
  const TransferMatrix& support() const noexcept { return support_; }
  const Vector& initial() const noexcept { return initial_; }
  const Matrix& transitions() const noexcept { return transitions_; }

 private:
  TransferMatrix support_;
  Vector initial_;
  Matrix transitions_;
};

/// Measure of the cylinder [u] under the Markov law:
/// initial(u_1) * prod_j P(u_j, u_{j+1}). Zero for inadmissible u; one for
/// the empty word.
double cylinder_measure_sigma(const MarkovMeasure& mu, const Word& u);

/// log2 of the above, accumulated in the log domain so that long words do
/// not underflow. -infinity when the measure is zero.
double log2_cylinder_measure_sigma(const MarkovMeasure& mu, const Word& u);

/// Product-measure value of the cylinder [u]: the product over odd i of the
/// Markov measure of u restricted to the chain of i. Zero iff u is not
/// multiplicatively admissible.
double cylinder_measure_multiplicative(const MarkovMeasure& mu, const Word& u);

double log2_cylinder_measure_multiplicative(const MarkovMeasure& mu, const Word& u);

/// Base-2 entropy -sum mu[u] log2 mu[u] over admissible length-k words, by
/// exhaustive enumeration (0 log 0 = 0). Subject to the enumeration cap.
double partition_entropy(const MarkovMeasure& mu, Index k,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// The same entropy computed exactly from the chain structure, with no
/// enumeration: H(initial) plus the expected row entropies under the
/// running marginals. Reaches depths far beyond the enumeration cap.
double markov_prefix_entropy(const MarkovMeasure& mu, Index k);

/// The weighted entropy series sum_k H_k / 2^(k+1) (base-2 entropies).
struct EntropySeries {
  std::vector<double> terms;  ///< H_k / 2^(k+1) for k = 1..depth
  double partial = 0.0;       ///< running sum of terms
  double tail_bound = 0.0;    ///< sum_{k>depth} k 2^(-k-1) log2(m), certified
  int depth = 0;
};

/// Sums the series to the smallest depth whose tail bound is <= tol,
/// using the exact chain-marginal entropies.
EntropySeries entropy_series(const MarkovMeasure& mu, double tol);

double binary_entropy(double p);

/// Closed form 2 H(p) / (3 - p) for the value of the entropy series of the
/// golden family at parameter p. Throws std::domain_error at p in {0,1}.
double golden_series_closed_form(double p);

struct OptimizeResult {
  MarkovMeasure measure;
  /// Best series value found, in base-m units (series bits / log2 m) so it
  /// compares directly against the dimension values.
  double s_value = 0.0;
  double series_bits = 0.0;
  int starts = 0;
  int iterations = 0;  ///< total ascent iterations across starts
};

/// Maximizes the entropy series over Markov measures on A: interior
/// (softmax) coordinates per row restricted to the support pattern,
/// gradient ascent with backtracking line search, 16 seeded starts.
OptimizeResult optimize_markov(const TransferMatrix& A, double tol, std::uint64_t seed);

}  // namespace multishift
