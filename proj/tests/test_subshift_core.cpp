#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "multishift/chains.hpp"
#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"
#include "multishift/word.hpp"

using namespace multishift;

namespace {

TransferMatrix circulant3() {
  Matrix01 e(3, 3);
  e << 1, 1, 0, 0, 1, 1, 1, 0, 1;
  return TransferMatrix(e);
}

// Fibonacci-style count of binary words avoiding the factor 11:
// 2, 3, 5, 8, 13, ...
BigInt golden_count_reference(Index k) {
  if (k == 0) return 1;
  BigInt a = 1, b = 2;  // counts at k = 0 and k = 1
  for (Index i = 1; i < k; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace

TEST_CASE("word construction and access") {
  const Word u = Word::from_string("0110");
  CHECK(u.length() == 4);
  CHECK_FALSE(u.empty());
  CHECK(u.at(1) == 0);
  CHECK(u.at(2) == 1);
  CHECK(u.at(4) == 0);
  CHECK(u.str() == "0110");
  CHECK(u.count_symbol(0) == 2);
  CHECK(u.count_symbol(1) == 2);
  CHECK(u.count_symbol(7) == 0);

  CHECK(Word().empty());
  CHECK(Word().length() == 0);
  CHECK(Word::from_string("").empty());

  CHECK_THROWS_AS((void)u.at(0), IndexOutOfRangeError);
  CHECK_THROWS_AS((void)u.at(5), IndexOutOfRangeError);
  CHECK_THROWS_AS((void)Word::from_string("01a"), std::invalid_argument);
}

TEST_CASE("word prefix and ordering") {
  const Word u = Word::from_string("0110");
  CHECK(u.prefix(0) == Word());
  CHECK(u.prefix(2) == Word::from_string("01"));
  CHECK(u.prefix(4) == u);
  CHECK_THROWS_AS((void)u.prefix(5), IndexOutOfRangeError);
  CHECK_THROWS_AS((void)u.prefix(-1), IndexOutOfRangeError);

  // lexicographic comparison via the defaulted spaceship
  CHECK(Word::from_string("001") < Word::from_string("010"));
  CHECK(Word::from_string("01") < Word::from_string("010"));
  CHECK(Word::from_string("10") == Word::from_string("10"));
}

TEST_CASE("transfer matrix validation") {
  Matrix01 not_square(2, 3);
  not_square.setZero();
  CHECK_THROWS_AS(TransferMatrix{not_square}, MalformedMatrixError);

  Matrix01 too_small(1, 1);
  too_small << 1;
  CHECK_THROWS_AS(TransferMatrix{too_small}, MalformedMatrixError);

  Matrix01 bad_entry(2, 2);
  bad_entry << 1, 2, 1, 0;
  CHECK_THROWS_AS(TransferMatrix{bad_entry}, MalformedMatrixError);

  const TransferMatrix g = TransferMatrix::golden_mean();
  CHECK(g.size() == 2);
  CHECK(g.allows(0, 0));
  CHECK(g.allows(0, 1));
  CHECK(g.allows(1, 0));
  CHECK_FALSE(g.allows(1, 1));
  CHECK(g.max_row_sum() == 2);
  CHECK_FALSE(g.equal_row_sums());

  const TransferMatrix f3 = TransferMatrix::full_shift(3);
  CHECK(f3.size() == 3);
  CHECK(f3.equal_row_sums());
  CHECK(f3.max_row_sum() == 3);
  CHECK(f3.row_sums() == Eigen::VectorXi::Constant(3, 3));

  CHECK(g == TransferMatrix::golden_mean());
  CHECK_FALSE(g == TransferMatrix::full_shift(2));
}

TEST_CASE("word_in_alphabet") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  CHECK(word_in_alphabet(g, Word::from_string("0101")));
  CHECK(word_in_alphabet(g, Word()));
  CHECK_FALSE(word_in_alphabet(g, Word::from_string("012")));
}

TEST_CASE("wielandt bound") {
  CHECK(wielandt_bound(2) == 2);
  CHECK(wielandt_bound(3) == 5);
  CHECK(wielandt_bound(4) == 10);
}

TEST_CASE("primitivity detection") {
  TransferMatrix g = TransferMatrix::golden_mean();
  CHECK(find_primitivity_power(g, wielandt_bound(2)) == 2);
  CHECK_FALSE(g.primitivity_power().has_value());  // pure query leaves the cache alone
  CHECK(validate_primitive(g, wielandt_bound(2)) == 2);
  CHECK(g.primitivity_power() == 2);

  TransferMatrix full = TransferMatrix::full_shift(2);
  CHECK(find_primitivity_power(full, 2) == 1);
  CHECK_NOTHROW(ensure_primitive(full));

  // the swap permutation is irreducible but 2-periodic, so never primitive
  Matrix01 swap_entries(2, 2);
  swap_entries << 0, 1, 1, 0;
  TransferMatrix swap_matrix{swap_entries};
  CHECK_THROWS_AS((void)find_primitivity_power(swap_matrix, wielandt_bound(2)),
                  NotPrimitiveError);
  CHECK_THROWS_AS(ensure_primitive(swap_matrix), NotPrimitiveError);

  Matrix01 cycle_entries(3, 3);
  cycle_entries << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  TransferMatrix cycle{cycle_entries};
  CHECK_THROWS_AS((void)find_primitivity_power(cycle, wielandt_bound(3)), NotPrimitiveError);

  try {
    find_primitivity_power(swap_matrix, 17);
  } catch (const NotPrimitiveError& e) {
    CHECK(e.cap == 17);
  }
}

TEST_CASE("admissible word counts") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  CHECK(count_admissible_words(g, 0) == 1);
  CHECK(count_admissible_words(g, 1) == 2);
  CHECK(count_admissible_words(g, 2) == 3);
  CHECK(count_admissible_words(g, 3) == 5);
  CHECK(count_admissible_words(g, 4) == 8);
  CHECK(count_admissible_words(g, 5) == 13);
  CHECK(count_admissible_words(g, 6) == 21);

  // two-term recurrence holds exactly far beyond the 64-bit range
  for (Index k = 2; k <= 64; ++k) {
    CHECK(count_admissible_words(g, k) ==
          count_admissible_words(g, k - 1) + count_admissible_words(g, k - 2));
    CHECK(count_admissible_words(g, k) == golden_count_reference(k));
  }

  const TransferMatrix f3 = TransferMatrix::full_shift(3);
  BigInt power = 1;
  for (Index k = 0; k <= 40; ++k) {
    CHECK(count_admissible_words(f3, k) == power);
    power *= 3;
  }
}

TEST_CASE("admissible word enumeration") {
  const TransferMatrix g = TransferMatrix::golden_mean();

  const std::vector<Word> expected = {
      Word::from_string("000"), Word::from_string("001"), Word::from_string("010"),
      Word::from_string("100"), Word::from_string("101")};
  CHECK(enumerate_admissible_words(g, 3) == expected);

  const std::vector<Word> empty_word_only = enumerate_admissible_words(g, 0);
  REQUIRE(empty_word_only.size() == 1);
  CHECK(empty_word_only[0].empty());

  for (const TransferMatrix& A : {g, circulant3()}) {
    for (Index k = 1; k <= 12; ++k) {
      const auto words = enumerate_admissible_words(A, k);
      CHECK(BigInt(words.size()) == count_admissible_words(A, k));
      CHECK(std::is_sorted(words.begin(), words.end()));
      for (const Word& u : words) {
        CHECK(u.length() == k);
      }
    }
  }
}

TEST_CASE("enumeration budget") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  // the guard is on raw candidates m^k, so cap 7 rejects k = 3 and cap 8 admits it
  CHECK_THROWS_AS((void)enumerate_admissible_words(g, 3, 7), EnumerationTooLargeError);
  CHECK(enumerate_admissible_words(g, 3, 8).size() == 5);
  CHECK_THROWS_AS((void)enumerate_admissible_words(g, 25), EnumerationTooLargeError);
}

TEST_CASE("chain decomposition") {
  const std::vector<Index> chain1 = {1, 2, 4, 8};
  const std::vector<Index> chain3 = {3, 6};
  CHECK(chain_in_range(1, 8) == chain1);
  CHECK(chain_in_range(3, 8) == chain3);
  CHECK(chain_in_range(7, 8) == std::vector<Index>{7});

  CHECK(chain_length(1, 8) == 4);
  CHECK(chain_length(3, 8) == 2);
  CHECK(chain_length(5, 8) == 1);

  const ChainDecomposition dec = chain_decomposition(8);
  CHECK(dec.n == 8);
  CHECK(dec.chain_count() == 4);
  CHECK(dec.chain(1) == chain1);
  CHECK(dec.chain(3) == chain3);
  CHECK_THROWS_AS((void)dec.chain(2), IndexOutOfRangeError);
  CHECK_THROWS_AS((void)dec.chain(9), IndexOutOfRangeError);

  // chains partition {1,...,n}
  for (Index n = 1; n <= 64; ++n) {
    const ChainDecomposition d = chain_decomposition(n);
    std::set<Index> seen;
    for (const auto& chain : d.chains) {
      CHECK_FALSE(chain.empty());
      for (Index pos : chain) {
        CHECK(pos >= 1);
        CHECK(pos <= n);
        CHECK(seen.insert(pos).second);  // no position twice
      }
    }
    CHECK(static_cast<Index>(seen.size()) == n);
    CHECK(d.chain_count() == (n + 1) / 2);
  }
}

TEST_CASE("chain length census") {
  using Census = std::vector<std::pair<Index, Index>>;
  CHECK(chain_length_census(8) == Census{{1, 2}, {2, 1}, {4, 1}});
  CHECK(chain_length_census(32) == Census{{1, 8}, {2, 4}, {3, 2}, {4, 1}, {6, 1}});

  for (Index n = 1; n <= 64; ++n) {
    const auto census = chain_length_census(n);
    Index covered = 0;
    for (const auto& [len, mult] : census) {
      CHECK(mult > 0);
      covered += len * mult;
      // whenever 2^(k+1) divides n, exactly n / 2^(k+1) chains have length k
      if (len < 62 && n % (Index{1} << (len + 1)) == 0) {
        CHECK(mult == n >> (len + 1));
      }
    }
    CHECK(covered == n);
    CHECK(std::is_sorted(census.begin(), census.end()));
  }
}

TEST_CASE("restrict word") {
  const Word u = Word::from_string("0110");
  const std::vector<Index> both = {1, 3};
  CHECK(restrict_word(u, both) == Word::from_string("01"));
  const std::vector<Index> skip = {2, 4};
  CHECK(restrict_word(u, skip) == Word::from_string("10"));
  CHECK(restrict_word(u, std::vector<Index>{}) == Word());
  const std::vector<Index> outside = {5};
  CHECK_THROWS_AS((void)restrict_word(u, outside), IndexOutOfRangeError);
}

TEST_CASE("multiplicative admissibility") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  CHECK(is_multiplicatively_admissible(g, Word()));
  CHECK(is_multiplicatively_admissible(g, Word::from_string("1")));
  CHECK(is_multiplicatively_admissible(g, Word::from_string("10")));
  CHECK_FALSE(is_multiplicatively_admissible(g, Word::from_string("11")));
  // positions 2 and 4 form the constrained pair here, positions 3 and 4 do not
  CHECK(is_multiplicatively_admissible(g, Word::from_string("0011")));
  CHECK_FALSE(is_multiplicatively_admissible(g, Word::from_string("0101")));

  // pairwise definition agrees with "every chain restriction is admissible"
  for (const TransferMatrix& A : {g, circulant3()}) {
    const TransferMatrix raw = TransferMatrix::full_shift(A.size());
    for (Index n = 1; n <= 12; ++n) {
      const ChainDecomposition dec = chain_decomposition(n);
      for (const Word& u : enumerate_admissible_words(raw, n)) {
        bool by_chains = true;
        for (const auto& chain : dec.chains) {
          const Word r = restrict_word(u, chain);
          for (Index j = 1; j < r.length(); ++j) {
            by_chains = by_chains && A.allows(r.at(j), r.at(j + 1));
          }
        }
        CHECK(is_multiplicatively_admissible(A, u) == by_chains);
      }
    }
  }
}

TEST_CASE("multiplicative prefix counts") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  const std::vector<long long> expected = {2,   3,   6,    10,   20,   30,   60,   96,
                                           192, 288, 576,  960,  1920, 2880, 5760, 9360};
  for (Index n = 1; n <= 16; ++n) {
    CHECK(count_multiplicative_prefixes(g, n) ==
          BigInt(expected[static_cast<std::size_t>(n - 1)]));
  }
  CHECK(count_multiplicative_prefixes(g, 0) == 1);

  // on a full shift the constraints are vacuous
  CHECK(count_multiplicative_prefixes(TransferMatrix::full_shift(2), 12) == 4096);
}
