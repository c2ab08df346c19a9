#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multishift/dimension.hpp"
#include "multishift/markov.hpp"
#include "multishift/oracle.hpp"
#include "multishift/sampling.hpp"
#include "multishift/transfer_matrix.hpp"

namespace multishift {

// Matrix text format: first line m, then m lines of m entries, each 0 or 1,
// separated by spaces. '#' starts a comment; blank lines are skipped.
TransferMatrix parse_matrix_text(std::string_view text);
TransferMatrix parse_matrix_file(const std::string& path);
std::string format_matrix(const TransferMatrix& A);

// Measure text format: first line m, next line the m initial probabilities,
// then m lines of m transition probabilities. Support is inferred from the
// positive transition entries. Probabilities print with 17 significant
// digits so parse(format(mu)) round-trips exactly.
MarkovMeasure parse_measure_text(std::string_view text);
MarkovMeasure parse_measure_file(const std::string& path);
std::string format_measure(const MarkovMeasure& mu);

enum class ReportFormat { kTable, kJson, kCsv };
ReportFormat parse_report_format(std::string_view name);  // "table"/"json"/"csv"

/// Both series side by side: box-counting partial sums of the matrix and
/// the weighted entropy series of the measure.
struct SeriesReport {
  std::vector<double> minkowski_partials;  ///< S_1..S_depth
  EntropySeries entropy;
  double tol = 0.0;
};

// All emitters below are deterministic: same inputs, byte-identical output.
std::string format_dimension_report(const DimensionReport& r, ReportFormat fmt);
std::string format_verdicts(const std::vector<OracleVerdict>& vs, ReportFormat fmt);
std::string format_sample_batch(const SampleBatch& b, ReportFormat fmt);
std::string format_series_report(const SeriesReport& s, ReportFormat fmt);
std::string format_optimize_report(const OptimizeResult& r, ReportFormat fmt);

// Full round-trip float formatting (17 significant digits).
std::string format_double(double x);

}  // namespace multishift
