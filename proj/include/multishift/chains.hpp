#pragma once

#include <span>
#include <utility>
#include <vector>

#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"
#include "multishift/word.hpp"

namespace multishift {

/// The positions {1,...,n} split into geometric chains (i, 2i, 4i, ...),
/// one per odd i <= n. The chains are pairwise disjoint and cover every
/// position exactly once.
struct ChainDecomposition {
  Index n = 0;
  /// chains[t] is the chain for odd i = 2t+1, positions in increasing order.
  std::vector<std::vector<Index>> chains;

  const std::vector<Index>& chain(Index odd_i) const;
  Index chain_count() const noexcept { return static_cast<Index>(chains.size()); }
};

ChainDecomposition chain_decomposition(Index n);

/// The chain (i, 2i, 4i, ...) cut to [1, n]. `odd_i` must be odd and <= n.
std::vector<Index> chain_in_range(Index odd_i, Index n);

/// Length of chain_in_range(odd_i, n): floor(log2(n / odd_i)) + 1.
Index chain_length(Index odd_i, Index n);

/// (length, number of odd i <= n whose chain has that length), lengths
/// ascending, zero-multiplicity lengths omitted.
std::vector<std::pair<Index, Index>> chain_length_census(Index n);

/// Subword of u read along the given positions (all must be <= length(u)).
Word restrict_word(const Word& u, std::span<const Index> chain);

/// True iff A(u_k, u_{2k}) = 1 for every k with 2k <= length(u);
/// equivalently, every chain restriction of u is an admissible word.
bool is_multiplicatively_admissible(const TransferMatrix& A, const Word& u);

/// Exact number of length-n words that are multiplicatively admissible:
/// the product over odd i <= n of the admissible-word count at the chain
/// length of i.
BigInt count_multiplicative_prefixes(const TransferMatrix& A, Index n);

}  // namespace multishift
