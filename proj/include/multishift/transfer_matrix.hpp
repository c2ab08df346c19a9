#pragma once

#include <optional>
#include <vector>

#include "multishift/types.hpp"
#include "multishift/word.hpp"

namespace multishift {

/// A 0-1 transition matrix A over an alphabet {0,...,m-1}, m >= 2. Entry
/// A(i,j) = 1 means the pair (i,j) is allowed. Immutable after construction
/// apart from the cached primitivity exponent.
class TransferMatrix {
 public:
  /// Throws MalformedMatrixError unless `entries` is square of side >= 2
  /// with all entries in {0,1}.
  explicit TransferMatrix(Matrix01 entries);

  static TransferMatrix golden_mean();
  static TransferMatrix full_shift(Index m);

  Index size() const noexcept { return entries_.rows(); }
  const Matrix01& entries() const noexcept { return entries_; }
  bool allows(Index i, Index j) const { return entries_(i, j) != 0; }

  Eigen::VectorXi row_sums() const { return entries_.rowwise().sum(); }
  bool equal_row_sums() const;
  int max_row_sum() const { return entries_.rowwise().sum().maxCoeff(); }

  /// Smallest r with A^r entrywise positive, if it has been established.
  std::optional<int> primitivity_power() const noexcept { return primitivity_power_; }

  bool operator==(const TransferMatrix& other) const { return entries_ == other.entries_; }

 private:
  friend int validate_primitive(TransferMatrix& A, int cap);

  Matrix01 entries_;
  std::optional<int> primitivity_power_;
};

/// Sharp search cap (m-1)^2 + 1 for the primitivity exponent of an m x m
/// matrix; failure below it rules primitivity out entirely.
int wielandt_bound(Index m);

/// Smallest r <= cap with A^r entrywise positive. Pure: does not touch the
/// cached exponent. Throws NotPrimitiveError if no such r exists.
int find_primitivity_power(const TransferMatrix& A, int cap);

/// find_primitivity_power + stores the result on A.
int validate_primitive(TransferMatrix& A, int cap);

/// Throws NotPrimitiveError unless A is primitive (checked against the
/// Wielandt bound; uses the cached exponent when present).
void ensure_primitive(const TransferMatrix& A);

/// Exact number of length-k words u with A(u_j, u_{j+1}) = 1 for all j,
/// via iterated integer matrix-vector products. k = 0 counts the empty word.
BigInt count_admissible_words(const TransferMatrix& A, Index k);

/// All admissible length-k words in lexicographic order. Guarded by the raw
/// candidate budget m^k <= cap (EnumerationTooLargeError above it).
std::vector<Word> enumerate_admissible_words(const TransferMatrix& A, Index k,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// True iff every symbol of u is below A's alphabet size.
bool word_in_alphabet(const TransferMatrix& A, const Word& u);

}  // namespace multishift
