#include "multishift/chains.hpp"

#include <string>

namespace multishift {

const std::vector<Index>& ChainDecomposition::chain(Index odd_i) const {
  if (odd_i < 1 || odd_i > n || odd_i % 2 == 0) {
    throw IndexOutOfRangeError("chain index " + std::to_string(odd_i) +
                               " is not an odd number in [1," + std::to_string(n) + "]");
  }
  return chains[static_cast<std::size_t>((odd_i - 1) / 2)];
}

ChainDecomposition chain_decomposition(Index n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  ChainDecomposition d;
  d.n = n;
  d.chains.reserve(static_cast<std::size_t>((n + 1) / 2));
  for (Index i = 1; i <= n; i += 2) {
    d.chains.push_back(chain_in_range(i, n));
  }
  return d;
}

std::vector<Index> chain_in_range(Index odd_i, Index n) {
  if (odd_i < 1 || odd_i > n || odd_i % 2 == 0) {
    throw IndexOutOfRangeError("chain index " + std::to_string(odd_i) +
                               " is not an odd number in [1," + std::to_string(n) + "]");
  }
  std::vector<Index> chain;
  for (Index pos = odd_i; pos <= n; pos *= 2) {
    chain.push_back(pos);
  }
  return chain;
}

Index chain_length(Index odd_i, Index n) {
  if (odd_i < 1 || odd_i > n || odd_i % 2 == 0) {
    throw IndexOutOfRangeError("chain index " + std::to_string(odd_i) +
                               " is not an odd number in [1," + std::to_string(n) + "]");
  }
  Index len = 0;
  for (Index pos = odd_i; pos <= n; pos *= 2) ++len;
  return len;
}

std::vector<std::pair<Index, Index>> chain_length_census(Index n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  // Chains of length >= k are exactly those with odd start <= n / 2^(k-1),
  // so the count of length-exactly-k chains is a difference of odd counts.
  auto odds_leq = [](Index x) { return (x + 1) / 2; };
  std::vector<std::pair<Index, Index>> census;
  for (Index k = 1; (n >> (k - 1)) > 0; ++k) {
    Index mult = odds_leq(n >> (k - 1)) - odds_leq(n >> k);
    if (mult > 0) census.emplace_back(k, mult);
  }
  return census;
}

Word restrict_word(const Word& u, std::span<const Index> chain) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(chain.size());
  for (Index pos : chain) {
    symbols.push_back(u.at(pos));
  }
  return Word(std::move(symbols));
}

bool is_multiplicatively_admissible(const TransferMatrix& A, const Word& u) {
  if (!word_in_alphabet(A, u)) return false;
  const Index n = u.length();
  for (Index k = 1; 2 * k <= n; ++k) {
    if (!A.allows(u.at(k), u.at(2 * k))) return false;
  }
  return true;
}

BigInt count_multiplicative_prefixes(const TransferMatrix& A, Index n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigInt total = 1;
  for (const auto& [length, multiplicity] : chain_length_census(n)) {
    total *= boost::multiprecision::pow(count_admissible_words(A, length),
                                        static_cast<unsigned>(multiplicity));
  }
  return total;
}

}  // namespace multishift
