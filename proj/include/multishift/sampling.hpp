#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "multishift/markov.hpp"
#include "multishift/types.hpp"
#include "multishift/word.hpp"

namespace multishift {

/// Deterministic, seedable generator. Uniform doubles are built directly
/// from the engine's 64-bit output so streams are identical across
/// platforms and standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Index distributed according to `probs` (need not be exactly normalized;
  /// the last positive entry absorbs the rounding slack).
  Index sample_index(const Vector& probs);

  /// Stream-independent child seed for sample `index` under `master`.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

/// Draws one length-n word from the product measure: each chain restriction
/// follows the Markov law independently (initial symbol, then transitions
/// down the chain), interleaved back into positions. The output is always
/// multiplicatively admissible.
Word sample_sequence(const MarkovMeasure& mu, Index n, SeededRng& rng);
Word sample_sequence(const MarkovMeasure& mu, Index n, std::uint64_t seed);

struct SampleBatch {
  std::uint64_t seed = 0;
  Index n = 0;
  /// The dyadic-scale theory is stated at n = 2^l; other lengths are
  /// allowed but flagged here.
  bool dyadic_length = false;
  std::vector<Word> words;
  std::vector<double> local_dims;  ///< -(1/n) log2 P[word] per sample
  double mean = 0.0;
  double stddev = 0.0;
};

/// Samples `count` words (one derived seed per sample index) and records
/// the local dimension -(1/n) log2 P[x_1^n] of each.
SampleBatch local_dimension_stats(const MarkovMeasure& mu, Index n, Index count,
                                  std::uint64_t seed);

/// Average (a_1 + ... + a_l)/l of the dyadic local dimensions
/// a_j = -2^(-j) log2 P[u_1^(2^j)] under the golden family at parameter p.
///
/// u must have length 2^l and be multiplicatively admissible for the
/// golden-mean matrix. When p is the root of p^3 = (1-p)^2 the average
/// collapses to the closed form
///   -log2(p) * (1 + [N1(u)/2^l - N1(u_1)] / (2l)),
/// N1 = number of 1-symbols; that identity is self-checked here whenever p
/// is that root (for other p the mixed terms do not cancel and no closed
/// form applies).
double telescoping_average(const Word& u, double p);

}  // namespace multishift
