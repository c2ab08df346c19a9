#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "multishift/chains.hpp"
#include "multishift/markov.hpp"
#include "multishift/sampling.hpp"
#include "multishift/types.hpp"
#include "multishift/word.hpp"

using namespace multishift;

namespace {

constexpr double kGoldenP = 0.56984029099805326591;

}  // namespace

TEST_CASE("seeded rng determinism") {
  SeededRng a(42);
  SeededRng b(42);
  for (int i = 0; i < 64; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }

  SeededRng c(43);
  SeededRng d(42);
  bool any_difference = false;
  for (int i = 0; i < 16; ++i) {
    any_difference = any_difference || (c.next_u64() != d.next_u64());
  }
  CHECK(any_difference);

  SeededRng u(7);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("index sampling") {
  SeededRng rng(1);

  Vector point_mass(3);
  point_mass << 0.0, 0.0, 1.0;
  for (int i = 0; i < 100; ++i) {
    CHECK(rng.sample_index(point_mass) == 2);
  }

  Vector fair(2);
  fair << 0.5, 0.5;
  int heads = 0;
  for (int i = 0; i < 10000; ++i) {
    heads += (rng.sample_index(fair) == 0) ? 1 : 0;
  }
  CHECK(heads > 4600);  // ~5000 expected; a miss here means a broken stream
  CHECK(heads < 5400);

  Vector dead(2);
  dead << 0.0, 0.0;
  CHECK_THROWS_AS((void)rng.sample_index(dead), std::invalid_argument);
}

TEST_CASE("derived seeds") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CHECK(seen.insert(SeededRng::derive(0, i)).second);
  }
  CHECK(SeededRng::derive(0, 5) != SeededRng::derive(1, 5));
  CHECK(SeededRng::derive(3, 4) == SeededRng::derive(3, 4));
}

TEST_CASE("sequence sampling") {
  const MarkovMeasure mu = MarkovMeasure::golden(kGoldenP);

  // every draw respects the multiplicative constraint by construction
  for (int i = 0; i < 1000; ++i) {
    SeededRng rng(SeededRng::derive(99, static_cast<std::uint64_t>(i)));
    const Word u = sample_sequence(mu, 16, rng);
    CHECK(u.length() == 16);
    CHECK(is_multiplicatively_admissible(mu.support(), u));
  }

  CHECK(sample_sequence(mu, 20, 5) == sample_sequence(mu, 20, 5));
  CHECK(sample_sequence(mu, 1, 5).length() == 1);
  CHECK_THROWS_AS((void)sample_sequence(mu, 0, 5), std::invalid_argument);
}

TEST_CASE("local dimension statistics") {
  const MarkovMeasure mu = MarkovMeasure::golden(kGoldenP);
  const SampleBatch batch = local_dimension_stats(mu, 16, 200, 12345);
  CHECK(batch.seed == 12345);
  CHECK(batch.n == 16);
  CHECK(batch.dyadic_length);
  REQUIRE(batch.words.size() == 200);
  REQUIRE(batch.local_dims.size() == 200);

  double sum = 0.0;
  for (std::size_t i = 0; i < batch.words.size(); ++i) {
    CHECK(is_multiplicatively_admissible(mu.support(), batch.words[i]));
    const double direct =
        -log2_cylinder_measure_multiplicative(mu, batch.words[i]) / 16.0;
    CHECK(batch.local_dims[i] == doctest::Approx(direct).epsilon(1e-13));
    sum += batch.local_dims[i];
  }
  CHECK(batch.mean == doctest::Approx(sum / 200.0).epsilon(1e-13));
  CHECK(batch.stddev > 0.0);
  // loose sanity corridor around the typical local dimension at this depth
  CHECK(batch.mean > 0.5);
  CHECK(batch.mean < 1.2);

  CHECK_FALSE(local_dimension_stats(mu, 12, 3, 0).dyadic_length);
  CHECK(local_dimension_stats(mu, 16, 50, 7).words ==
        local_dimension_stats(mu, 16, 50, 7).words);
}

TEST_CASE("telescoping average matches the closed identity") {
  const MarkovMeasure mu = MarkovMeasure::golden(kGoldenP);
  const double log2p = std::log2(kGoldenP);
  const Index n = 1024;  // 2^10
  const double ell = 10.0;

  for (int i = 0; i < 200; ++i) {
    SeededRng rng(SeededRng::derive(11, static_cast<std::uint64_t>(i)));
    const Word u = sample_sequence(mu, n, rng);
    const double average = telescoping_average(u, kGoldenP);
    const double ones_density =
        static_cast<double>(u.count_symbol(1)) / static_cast<double>(n);
    const double first_is_one = (u.at(1) == 1) ? 1.0 : 0.0;
    const double closed = -log2p * (1.0 + (ones_density - first_is_one) / (2.0 * ell));
    CHECK(std::fabs(average - closed) < 1e-12);
  }
}

TEST_CASE("telescoping average input validation") {
  CHECK_THROWS_AS((void)telescoping_average(Word::from_string("010100010101"), kGoldenP),
                  NotPowerOfTwoError);  // length 12
  CHECK_THROWS_AS((void)telescoping_average(Word::from_string("0"), kGoldenP),
                  NotPowerOfTwoError);  // a single scale has no average to take
  CHECK_THROWS_AS((void)telescoping_average(Word::from_string("11"), kGoldenP),
                  NotAdmissibleError);

  // away from the distinguished parameter the average is still defined,
  // it just has no closed form to collapse to
  const double value = telescoping_average(Word::from_string("0100"), 0.3);
  CHECK(std::isfinite(value));
  CHECK(value > 0.0);
}
