#include "multishift/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "multishift/chains.hpp"

namespace multishift {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Index SeededRng::sample_index(const Vector& probs) {
  double u = uniform01();
  double cum = 0.0;
  Index last_positive = -1;
  for (Index i = 0; i < probs.size(); ++i) {
    if (probs(i) <= 0.0) continue;
    last_positive = i;
    cum += probs(i);
    if (u < cum) return i;
  }
  if (last_positive < 0) {
    throw std::invalid_argument("cannot sample from an all-zero weight vector");
  }
  return last_positive;  // u fell into the rounding slack past the last entry
}

std::uint64_t SeededRng::derive(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

Word sample_sequence(const MarkovMeasure& mu, Index n, SeededRng& rng) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n), 0);
  // Chains are independent under the product measure: walk each one as an
  // ordinary Markov chain and interleave the results by position.
  for (const auto& chain : chain_decomposition(n).chains) {
    Index state = rng.sample_index(mu.initial());
    symbols[static_cast<std::size_t>(chain[0] - 1)] = static_cast<std::uint8_t>(state);
    for (std::size_t step = 1; step < chain.size(); ++step) {
      state = rng.sample_index(mu.transitions().row(state).transpose());
      symbols[static_cast<std::size_t>(chain[step] - 1)] = static_cast<std::uint8_t>(state);
    }
  }
  return Word(std::move(symbols));
}

Word sample_sequence(const MarkovMeasure& mu, Index n, std::uint64_t seed) {
  SeededRng rng(seed);
  return sample_sequence(mu, n, rng);
}

SampleBatch local_dimension_stats(const MarkovMeasure& mu, Index n, Index count,
                                  std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be at least 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.n = n;
  batch.dyadic_length = n >= 1 && (n & (n - 1)) == 0;
  batch.words.reserve(static_cast<std::size_t>(count));
  batch.local_dims.reserve(static_cast<std::size_t>(count));

  double sum = 0.0;
  for (Index i = 0; i < count; ++i) {
    SeededRng rng(SeededRng::derive(seed, static_cast<std::uint64_t>(i)));
    Word w = sample_sequence(mu, n, rng);
    double local = -log2_cylinder_measure_multiplicative(mu, w) / static_cast<double>(n);
    sum += local;
    batch.words.push_back(std::move(w));
    batch.local_dims.push_back(local);
  }

  batch.mean = sum / static_cast<double>(count);
  if (count > 1) {
    double sq = 0.0;
    for (double x : batch.local_dims) {
      sq += (x - batch.mean) * (x - batch.mean);
    }
    batch.stddev = std::sqrt(sq / static_cast<double>(count - 1));
  }
  return batch;
}

double telescoping_average(const Word& u, double p) {
  const Index n = u.length();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw NotPowerOfTwoError("word length " + std::to_string(n) +
                             " is not a power of two >= 2");
  }
  MarkovMeasure mu = MarkovMeasure::golden(p);
  if (!is_multiplicatively_admissible(mu.support(), u)) {
    throw NotAdmissibleError("word violates the multiplicative constraint");
  }

  int levels = 0;
  for (Index len = n; len > 1; len /= 2) ++levels;

  double sum = 0.0;
  for (int j = 1; j <= levels; ++j) {
    Index len = Index{1} << j;
    sum += -std::ldexp(log2_cylinder_measure_multiplicative(mu, u.prefix(len)), -j);
  }
  double average = sum / levels;

  // At the root of p^3 = (1-p)^2 the level averages telescope into a count
  // of 1-symbols; keep that identity as a self-check. Away from the root
  // the mixed terms do not cancel and no closed form is claimed.
  if (std::abs(p * p * p - (1.0 - p) * (1.0 - p)) <= 1e-9) {
    double ones_fraction = static_cast<double>(u.count_symbol(1)) / static_cast<double>(n);
    double first = u.at(1) == 1 ? 1.0 : 0.0;
    double closed = -std::log2(p) * (1.0 + (ones_fraction - first) / (2.0 * levels));
    if (std::abs(average - closed) > 1e-9 * (1.0 + std::abs(average))) {
      throw std::logic_error("telescoping self-check failed: average " +
                             std::to_string(average) + " vs closed form " +
                             std::to_string(closed));
    }
  }
  return average;
}

}  // namespace multishift
