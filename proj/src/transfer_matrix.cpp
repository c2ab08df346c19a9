#include "multishift/transfer_matrix.hpp"

#include <string>
#include <vector>

namespace multishift {

TransferMatrix::TransferMatrix(Matrix01 entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw MalformedMatrixError("transition matrix must be square, got " +
                               std::to_string(entries_.rows()) + "x" +
                               std::to_string(entries_.cols()));
  }
  if (entries_.rows() < 2) {
    throw MalformedMatrixError("alphabet needs at least 2 symbols, got " +
                               std::to_string(entries_.rows()));
  }
  for (Index i = 0; i < entries_.rows(); ++i) {
    for (Index j = 0; j < entries_.cols(); ++j) {
      if (entries_(i, j) != 0 && entries_(i, j) != 1) {
        throw MalformedMatrixError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + std::to_string(entries_(i, j)) +
                                   " not in {0,1}");
      }
    }
  }
}

TransferMatrix TransferMatrix::golden_mean() {
  Matrix01 e(2, 2);
  e << 1, 1,
       1, 0;
  return TransferMatrix(std::move(e));
}

TransferMatrix TransferMatrix::full_shift(Index m) {
  return TransferMatrix(Matrix01::Ones(m, m));
}

bool TransferMatrix::equal_row_sums() const {
  Eigen::VectorXi sums = row_sums();
  return (sums.array() == sums(0)).all();
}

int wielandt_bound(Index m) {
  return static_cast<int>((m - 1) * (m - 1) + 1);
}

int find_primitivity_power(const TransferMatrix& A, int cap) {
  const Index m = A.size();
  // Work with the boolean reachability pattern; saturating keeps the
  // entries in {0,1} so powers never overflow.
  Matrix01 power = A.entries();
  for (int r = 1; r <= cap; ++r) {
    if ((power.array() > 0).all()) return r;
    power = ((power * A.entries()).array() > 0).cast<int>().matrix();
  }
  throw NotPrimitiveError("no power up to " + std::to_string(cap) + " of the " +
                              std::to_string(m) + "x" + std::to_string(m) +
                              " matrix is entrywise positive; the matrix is not primitive" +
                              (cap >= wielandt_bound(m)
                                   ? " (the cap meets the Wielandt bound (m-1)^2+1, so this is conclusive)"
                                   : ""),
                          cap);
}

int validate_primitive(TransferMatrix& A, int cap) {
  int r = find_primitivity_power(A, cap);
  A.primitivity_power_ = r;
  return r;
}

void ensure_primitive(const TransferMatrix& A) {
  if (A.primitivity_power().has_value()) return;
  find_primitivity_power(A, wielandt_bound(A.size()));
}

BigInt count_admissible_words(const TransferMatrix& A, Index k) {
  if (k < 0) throw std::invalid_argument("word length must be nonnegative");
  if (k == 0) return 1;
  const Index m = A.size();
  std::vector<BigInt> v(static_cast<std::size_t>(m), BigInt(1));
  std::vector<BigInt> next(static_cast<std::size_t>(m));
  for (Index step = 1; step < k; ++step) {
    for (Index i = 0; i < m; ++i) {
      BigInt sum = 0;
      for (Index j = 0; j < m; ++j) {
        if (A.allows(i, j)) sum += v[static_cast<std::size_t>(j)];
      }
      next[static_cast<std::size_t>(i)] = std::move(sum);
    }
    v.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& x : v) total += x;
  return total;
}

std::vector<Word> enumerate_admissible_words(const TransferMatrix& A, Index k,
                                             std::uint64_t cap) {
  if (k < 0) throw std::invalid_argument("word length must be nonnegative");
  const Index m = A.size();
  std::uint64_t candidates = 1;
  for (Index i = 0; i < k; ++i) {
    if (candidates > cap / static_cast<std::uint64_t>(m)) {
      throw EnumerationTooLargeError("m^k = " + std::to_string(m) + "^" + std::to_string(k) +
                                     " exceeds the enumeration cap " + std::to_string(cap));
    }
    candidates *= static_cast<std::uint64_t>(m);
  }

  std::vector<Word> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  // Depth-first odometer over symbols; a disallowed pair prunes the whole
  // subtree, so only admissible prefixes are ever visited. Lexicographic
  // order falls out of scanning symbols in increasing order.
  std::vector<std::uint8_t> u(static_cast<std::size_t>(k), 0);
  std::vector<int> sym(static_cast<std::size_t>(k + 1), 0);
  Index j = 1;
  sym[1] = -1;
  while (j >= 1) {
    int s = ++sym[static_cast<std::size_t>(j)];
    if (s >= m) {
      --j;
      continue;
    }
    if (j > 1 && !A.allows(u[static_cast<std::size_t>(j - 2)], s)) continue;
    u[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(s);
    if (j == k) {
      out.emplace_back(u);
    } else {
      ++j;
      sym[static_cast<std::size_t>(j)] = -1;
    }
  }
  return out;
}

bool word_in_alphabet(const TransferMatrix& A, const Word& u) {
  for (std::uint8_t s : u.symbols()) {
    if (s >= A.size()) return false;
  }
  return true;
}

}  // namespace multishift
