#include "multishift/markov.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace multishift {
namespace {

constexpr double kStochasticSlack = 1e-12;

double entropy_term(double p) {
  return p > 0.0 ? -p * std::log2(p) : 0.0;
}

/// Row entropy -sum_j P(i,j) log2 P(i,j).
double row_entropy(const Matrix& P, Index i) {
  double h = 0.0;
  for (Index j = 0; j < P.cols(); ++j) h += entropy_term(P(i, j));
  return h;
}

}  // namespace

MarkovMeasure::MarkovMeasure(TransferMatrix support, Vector initial, Matrix transitions)
    : support_(std::move(support)), initial_(std::move(initial)), transitions_(std::move(transitions)) {
  const Index m = support_.size();
  if (initial_.size() != m || transitions_.rows() != m || transitions_.cols() != m) {
    throw MalformedMeasureError("measure dimensions do not match the alphabet size " +
                                std::to_string(m));
  }
  if ((initial_.array() < 0).any() || (transitions_.array() < 0).any()) {
    throw MalformedMeasureError("probabilities must be nonnegative");
  }
  if (std::abs(initial_.sum() - 1.0) > kStochasticSlack) {
    throw MalformedMeasureError("initial distribution sums to " +
                                std::to_string(initial_.sum()) + ", not 1");
  }
  for (Index i = 0; i < m; ++i) {
    if (std::abs(transitions_.row(i).sum() - 1.0) > kStochasticSlack) {
      throw MalformedMeasureError("transition row " + std::to_string(i) + " sums to " +
                                  std::to_string(transitions_.row(i).sum()) + ", not 1");
    }
    for (Index j = 0; j < m; ++j) {
      if (transitions_(i, j) > 0 && !support_.allows(i, j)) {
        throw MalformedMeasureError("positive transition (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") on a disallowed pair");
      }
    }
  }
}

MarkovMeasure MarkovMeasure::golden(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw MalformedMeasureError("golden family parameter must lie in (0,1), got " +
                                std::to_string(p));
  }
  Vector initial(2);
  initial << p, 1.0 - p;
  Matrix transitions(2, 2);
  transitions << p, 1.0 - p,
                 1.0, 0.0;
  return MarkovMeasure(TransferMatrix::golden_mean(), std::move(initial), std::move(transitions));
}

MarkovMeasure MarkovMeasure::uniform_on_support(TransferMatrix support) {
  const Index m = support.size();
  Vector initial = Vector::Constant(m, 1.0 / static_cast<double>(m));
  Matrix transitions = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    int allowed = support.entries().row(i).sum();
    if (allowed == 0) {
      throw MalformedMeasureError("row " + std::to_string(i) +
                                  " allows no successor; no Markov measure exists on it");
    }
    for (Index j = 0; j < m; ++j) {
      if (support.allows(i, j)) transitions(i, j) = 1.0 / allowed;
    }
  }
  return MarkovMeasure(std::move(support), std::move(initial), std::move(transitions));
}

double cylinder_measure_sigma(const MarkovMeasure& mu, const Word& u) {
  if (u.empty()) return 1.0;
  if (!word_in_alphabet(mu.support(), u)) return 0.0;
  double p = mu.initial()(u.at(1));
  for (Index j = 1; j < u.length(); ++j) {
    p *= mu.transitions()(u.at(j), u.at(j + 1));
  }
  return p;
}

double log2_cylinder_measure_sigma(const MarkovMeasure& mu, const Word& u) {
  constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
  if (u.empty()) return 0.0;
  if (!word_in_alphabet(mu.support(), u)) return kMinusInf;
  double first = mu.initial()(u.at(1));
  if (first == 0.0) return kMinusInf;
  double sum = std::log2(first);
  for (Index j = 1; j < u.length(); ++j) {
    double step = mu.transitions()(u.at(j), u.at(j + 1));
    if (step == 0.0) return kMinusInf;
    sum += std::log2(step);
  }
  return sum;
}

double cylinder_measure_multiplicative(const MarkovMeasure& mu, const Word& u) {
  double p = 1.0;
  for (const auto& chain : chain_decomposition(u.length()).chains) {
    p *= cylinder_measure_sigma(mu, restrict_word(u, chain));
    if (p == 0.0) break;
  }
  return p;
}

double log2_cylinder_measure_multiplicative(const MarkovMeasure& mu, const Word& u) {
  double sum = 0.0;
  for (const auto& chain : chain_decomposition(u.length()).chains) {
    sum += log2_cylinder_measure_sigma(mu, restrict_word(u, chain));
    if (std::isinf(sum)) break;
  }
  return sum;
}

double partition_entropy(const MarkovMeasure& mu, Index k, std::uint64_t cap) {
  double h = 0.0;
  for (const Word& u : enumerate_admissible_words(mu.support(), k, cap)) {
    h += entropy_term(cylinder_measure_sigma(mu, u));
  }
  return h;
}

double markov_prefix_entropy(const MarkovMeasure& mu, Index k) {
  if (k < 1) throw std::invalid_argument("prefix length must be at least 1");
  // Chain rule: H(X_1..X_k) = H(X_1) + sum_j H(X_(j+1) | X_j), and the
  // conditional terms are the row entropies weighted by the running
  // marginal distribution.
  double h = 0.0;
  for (Index i = 0; i < mu.size(); ++i) h += entropy_term(mu.initial()(i));
  Vector marginal = mu.initial();
  for (Index step = 1; step < k; ++step) {
    for (Index i = 0; i < mu.size(); ++i) {
      h += marginal(i) * row_entropy(mu.transitions(), i);
    }
    marginal = mu.transitions().transpose() * marginal;
  }
  return h;
}

EntropySeries entropy_series(const MarkovMeasure& mu, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  const double log2_m = std::log2(static_cast<double>(mu.size()));

  EntropySeries series;
  // Incremental form of markov_prefix_entropy: carry the running marginal
  // and cumulative entropy instead of recomputing from scratch per depth.
  double h = 0.0;
  for (Index i = 0; i < mu.size(); ++i) h += entropy_term(mu.initial()(i));
  Vector marginal = mu.initial();

  constexpr int kMaxDepth = 10000;
  for (int k = 1; k <= kMaxDepth; ++k) {
    double term = std::ldexp(h, -k - 1);
    series.terms.push_back(term);
    series.partial += term;
    series.depth = k;
    // H_j <= j log2(m), so the tail past K is at most
    // log2(m) sum_{j>K} j 2^(-j-1) = (K+2) 2^(-K-1) log2(m).
    series.tail_bound = std::ldexp((k + 2) * log2_m, -k - 1);
    if (series.tail_bound <= tol) return series;

    for (Index i = 0; i < mu.size(); ++i) {
      h += marginal(i) * row_entropy(mu.transitions(), i);
    }
    marginal = mu.transitions().transpose() * marginal;
  }
  throw NoConvergenceError("entropy series tail bound never reached tol", kMaxDepth);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary entropy needs p in [0,1], got " + std::to_string(p));
  }
  return entropy_term(p) + entropy_term(1.0 - p);
}

double golden_series_closed_form(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("closed form needs p in (0,1), got " + std::to_string(p));
  }
  return 2.0 * binary_entropy(p) / (3.0 - p);
}

namespace {

/// Softmax coordinates for the optimizer: one logit per initial entry and
/// one per allowed transition in every row with at least two choices.
/// Rows with a single allowed successor are forced and carry no parameter.
struct SoftmaxChart {
  explicit SoftmaxChart(const TransferMatrix& A) : support(&A) {
    const Index m = A.size();
    dim = m;  // initial-distribution block
    for (Index i = 0; i < m; ++i) {
      int allowed = A.entries().row(i).sum();
      if (allowed == 0) {
        throw MalformedMeasureError("row " + std::to_string(i) +
                                    " allows no successor; nothing to optimize over");
      }
      if (allowed >= 2) {
        free_rows.push_back(i);
        dim += allowed;
      }
    }
  }

  MarkovMeasure measure(const Vector& theta) const {
    const Index m = support->size();
    Vector initial(m);
    {
      double top = theta.head(m).maxCoeff();
      for (Index i = 0; i < m; ++i) initial(i) = std::exp(theta(i) - top);
      initial /= initial.sum();
    }
    Matrix transitions = Matrix::Zero(m, m);
    Index offset = m;
    std::size_t next_free = 0;
    for (Index i = 0; i < m; ++i) {
      if (next_free < free_rows.size() && free_rows[next_free] == i) {
        double top = -std::numeric_limits<double>::infinity();
        for (Index j = 0; j < m; ++j) {
          if (support->allows(i, j)) top = std::max(top, theta(offset + slot(i, j)));
        }
        double total = 0.0;
        for (Index j = 0; j < m; ++j) {
          if (!support->allows(i, j)) continue;
          transitions(i, j) = std::exp(theta(offset + slot(i, j)) - top);
          total += transitions(i, j);
        }
        transitions.row(i) /= total;
        offset += support->entries().row(i).sum();
        ++next_free;
      } else {
        for (Index j = 0; j < m; ++j) {
          if (support->allows(i, j)) transitions(i, j) = 1.0;
        }
      }
    }
    return MarkovMeasure(*support, std::move(initial), std::move(transitions));
  }

  const TransferMatrix* support;
  std::vector<Index> free_rows;
  Index dim = 0;

 private:
  // Position of allowed entry (i,j) within row i's parameter block.
  Index slot(Index i, Index j) const {
    Index s = 0;
    for (Index c = 0; c < j; ++c) {
      if (support->allows(i, c)) ++s;
    }
    return s;
  }
};

}  // namespace

OptimizeResult optimize_markov(const TransferMatrix& A, double tol, std::uint64_t seed) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  ensure_primitive(A);
  const SoftmaxChart chart(A);
  const double series_tol = std::min(tol, 1e-12);

  auto objective = [&](const Vector& theta) {
    return entropy_series(chart.measure(theta), series_tol).partial;
  };

  constexpr int kStarts = 16;
  constexpr int kMaxAscent = 300;
  constexpr double kGradStep = 1e-6;

  OptimizeResult best{chart.measure(Vector::Zero(chart.dim)), 0.0, 0.0, kStarts, 0};
  best.series_bits = -1.0;

  for (int start = 0; start < kStarts; ++start) {
    Vector theta = Vector::Zero(chart.dim);
    if (start > 0) {
      // Spread the starts over a modest logit box; exact stream contents
      // only need to be deterministic, not portable beyond mt19937_64.
      std::mt19937_64 engine(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(start));
      for (Index i = 0; i < chart.dim; ++i) {
        double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        theta(i) = 4.0 * u - 2.0;
      }
    }

    double f = objective(theta);
    int stale = 0;
    for (int it = 0; it < kMaxAscent && stale < 2; ++it) {
      ++best.iterations;
      Vector grad(chart.dim);
      for (Index i = 0; i < chart.dim; ++i) {
        Vector probe = theta;
        probe(i) = theta(i) + kGradStep;
        double up = objective(probe);
        probe(i) = theta(i) - kGradStep;
        double down = objective(probe);
        grad(i) = (up - down) / (2.0 * kGradStep);
      }

      double improved = 0.0;
      double step = 1.0;
      while (step > 1e-12) {
        Vector candidate = theta + step * grad;
        double fc = objective(candidate);
        if (fc > f) {
          improved = fc - f;
          theta = candidate;
          f = fc;
          break;
        }
        step *= 0.5;
      }
      stale = improved < 1e-13 ? stale + 1 : 0;
    }

    if (f > best.series_bits) {
      best.series_bits = f;
      best.measure = chart.measure(theta);
    }
  }

  best.s_value = best.series_bits / std::log2(static_cast<double>(A.size()));
  return best;
}

}  // namespace multishift
