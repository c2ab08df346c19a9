// Command-line front end: parse matrix/measure files, dispatch one of the
// computation modes, and emit a report. Exit status: 0 on success, 2 when a
// verification run has failing verdicts, 1 on input or computation errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "multishift/dimension.hpp"
#include "multishift/io.hpp"
#include "multishift/markov.hpp"
#include "multishift/oracle.hpp"
#include "multishift/sampling.hpp"
#include "multishift/transfer_matrix.hpp"

namespace {

using namespace multishift;

struct Options {
  std::string mode;
  std::string matrix_path;
  std::string measure_path;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  long depth = 0;  // 0 = mode default
  long n = 0;      // 0 = mode default
  long count = 0;  // 0 = mode default
  std::string format = "table";
  bool format_given = false;
  std::string out_path;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
  out << text;
}

/// Largest exponent e <= target with m^e inside the enumeration cap, so
/// default check depths shrink automatically for larger alphabets.
long capped_exponent(Index m, long target, std::uint64_t cap) {
  long e = 0;
  std::uint64_t candidates = 1;
  while (e < target && candidates <= cap / static_cast<std::uint64_t>(m)) {
    candidates *= static_cast<std::uint64_t>(m);
    ++e;
  }
  return e;
}

TransferMatrix load_matrix(const Options& opt, bool primitivity_is_fatal) {
  if (opt.matrix_path.empty()) {
    throw std::runtime_error("mode '" + opt.mode + "' needs --matrix");
  }
  TransferMatrix A = parse_matrix_file(opt.matrix_path);
  try {
    validate_primitive(A, wielandt_bound(A.size()));
  } catch (const NotPrimitiveError&) {
    if (primitivity_is_fatal) throw;
    std::cerr << "warning: " << opt.matrix_path
              << " is not primitive; dimension formulas do not apply to it\n";
  }
  return A;
}

/// Measure from --measure, else the uniform one on the matrix support.
MarkovMeasure load_measure(const Options& opt, bool primitivity_is_fatal) {
  if (!opt.measure_path.empty()) return parse_measure_file(opt.measure_path);
  return MarkovMeasure::uniform_on_support(load_matrix(opt, primitivity_is_fatal));
}

ReportFormat chosen_format(const Options& opt, const char* mode_default) {
  return parse_report_format(opt.format_given ? opt.format : mode_default);
}

int run_dims(const Options& opt) {
  TransferMatrix A = load_matrix(opt, /*primitivity_is_fatal=*/true);
  write_output(opt, format_dimension_report(dimension_report(A, opt.tol),
                                            chosen_format(opt, "table")));
  return 0;
}

int run_verify(const Options& opt) {
  TransferMatrix A = load_matrix(opt, /*primitivity_is_fatal=*/false);
  MarkovMeasure mu = opt.measure_path.empty() ? MarkovMeasure::uniform_on_support(A)
                                              : parse_measure_file(opt.measure_path);

  const std::uint64_t cap = kDefaultEnumerationCap;
  const long n_max = opt.n > 0 ? opt.n : capped_exponent(A.size(), 16, cap);
  const long k_max = opt.depth > 0 ? opt.depth : capped_exponent(mu.size(), 12, cap);
  const long sampler_n = capped_exponent(mu.size(), 4, cap);
  const long sampler_count = opt.count > 0 ? opt.count : 100000;

  std::vector<OracleVerdict> verdicts = verify_prefix_counts(A, n_max, cap);
  for (auto& v : empirical_box_dimension(A, 12)) verdicts.push_back(std::move(v));
  for (auto& v : verify_measure_normalization(mu, n_max, cap)) verdicts.push_back(std::move(v));
  for (auto& v : verify_entropy_series(mu, k_max, cap)) verdicts.push_back(std::move(v));
  verdicts.push_back(verify_sampler(mu, sampler_n, sampler_count, opt.seed));

  write_output(opt, format_verdicts(verdicts, chosen_format(opt, "table")));
  for (const auto& v : verdicts) {
    if (!v.passed) return 2;
  }
  return 0;
}

int run_optimize(const Options& opt) {
  TransferMatrix A = load_matrix(opt, /*primitivity_is_fatal=*/true);
  write_output(opt, format_optimize_report(optimize_markov(A, opt.tol, opt.seed),
                                           chosen_format(opt, "table")));
  return 0;
}

int run_sample(const Options& opt) {
  MarkovMeasure mu = load_measure(opt, /*primitivity_is_fatal=*/false);
  const long n = opt.n > 0 ? opt.n : 16;
  const long count = opt.count > 0 ? opt.count : 1000;
  write_output(opt, format_sample_batch(local_dimension_stats(mu, n, count, opt.seed),
                                        chosen_format(opt, "csv")));
  return 0;
}

int run_series(const Options& opt) {
  if (opt.matrix_path.empty() && opt.measure_path.empty()) {
    throw std::runtime_error("mode 'series' needs --matrix or --measure");
  }
  MarkovMeasure mu = opt.measure_path.empty()
                         ? MarkovMeasure::uniform_on_support(load_matrix(opt, false))
                         : parse_measure_file(opt.measure_path);
  TransferMatrix A = opt.matrix_path.empty() ? mu.support() : load_matrix(opt, false);

  SeriesReport report;
  report.tol = opt.tol;
  report.minkowski_partials = minkowski_partial_sums(A, opt.depth > 0 ? static_cast<int>(opt.depth) : 12);
  report.entropy = entropy_series(mu, opt.tol);
  write_output(opt, format_series_report(report, chosen_format(opt, "table")));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Dimensions, entropy series, and verification suites for multiplicative "
               "subshifts of finite type"};
  app.add_option("--mode", opt.mode, "dims | verify | optimize | sample | series")
      ->required()
      ->check(CLI::IsMember({"dims", "verify", "optimize", "sample", "series"}));
  app.add_option("--matrix", opt.matrix_path, "path to a 0/1 transition matrix file");
  app.add_option("--measure", opt.measure_path, "path to a Markov measure file");
  app.add_option("--tol", opt.tol, "tolerance for solvers and series tails")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "RNG seed for sampling and optimizer starts")
      ->capture_default_str();
  app.add_option("--depth", opt.depth, "series depth / entropy check depth (0 = default)");
  app.add_option("--n", opt.n, "word length / enumeration depth (0 = default)");
  app.add_option("--count", opt.count, "sample count (0 = default)");
  auto* format_opt =
      app.add_option("--format", opt.format, "table | json | csv (sample defaults to csv)")
          ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  opt.format_given = format_opt->count() > 0;

  try {
    if (opt.mode == "dims") return run_dims(opt);
    if (opt.mode == "verify") return run_verify(opt);
    if (opt.mode == "optimize") return run_optimize(opt);
    if (opt.mode == "sample") return run_sample(opt);
    return run_series(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
