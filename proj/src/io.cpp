#include "multishift/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace multishift {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 0;
  Token current;
  bool in_token = false;
  bool in_comment = false;
  auto flush = [&] {
    if (in_token) {
      out.push_back(current);
      in_token = false;
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      column = 0;
      continue;
    }
    ++column;
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (!in_token) {
      current = Token{std::string(), line, column};
      in_token = true;
    }
    current.text.push_back(c);
  }
  flush();
  return out;
}

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& next(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      int line = tokens_.empty() ? 1 : tokens_.back().line;
      int column = tokens_.empty() ? 1 : tokens_.back().column;
      throw ParseError("unexpected end of input, expected " + what, line, column);
    }
    return tokens_[pos_++];
  }

  void expect_done() const {
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.column);
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

long parse_long(const Token& t, const std::string& what) {
  long value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [p, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || p != end) {
    throw ParseError("expected " + what + ", got '" + t.text + "'", t.line, t.column);
  }
  return value;
}

double parse_real(const Token& t, const std::string& what) {
  double value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  auto [p, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || p != end) {
    throw ParseError("expected " + what + ", got '" + t.text + "'", t.line, t.column);
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

/// Plain two-column key/value table.
std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += pad_right(key, width + 2) + value + "\n";
  }
  return out;
}

/// Column-aligned table with a header row.
std::string grid_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += c + 1 < row.size() ? pad_right(row[c], widths[c] + 2) : row[c];
    }
    out += "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ",";
      out += row[c];
    }
    out += "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

ordered_json measure_json(const MarkovMeasure& mu) {
  ordered_json j;
  j["m"] = mu.size();
  j["initial"] = std::vector<double>(mu.initial().data(), mu.initial().data() + mu.size());
  std::vector<std::vector<double>> rows;
  for (Index i = 0; i < mu.size(); ++i) {
    std::vector<double> row;
    for (Index c = 0; c < mu.size(); ++c) row.push_back(mu.transitions()(i, c));
    rows.push_back(std::move(row));
  }
  j["transitions"] = rows;
  return j;
}

std::vector<double> entropy_running(const EntropySeries& s) {
  std::vector<double> running;
  running.reserve(s.terms.size());
  double sum = 0.0;
  for (double t : s.terms) {
    sum += t;
    running.push_back(sum);
  }
  return running;
}

}  // namespace

TransferMatrix parse_matrix_text(std::string_view text) {
  TokenCursor cursor(tokenize(text));
  const Token& size_token = cursor.next("alphabet size");
  long m = parse_long(size_token, "alphabet size");
  if (m < 2 || m > 1024) {
    throw ParseError("alphabet size must lie in [2,1024], got " + size_token.text,
                     size_token.line, size_token.column);
  }
  Matrix01 entries(m, m);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      const Token& t = cursor.next("matrix entry");
      if (t.text == "0") {
        entries(i, j) = 0;
      } else if (t.text == "1") {
        entries(i, j) = 1;
      } else {
        throw ParseError("entry '" + t.text + "' not in {0,1}", t.line, t.column);
      }
    }
  }
  cursor.expect_done();
  return TransferMatrix(std::move(entries));
}

TransferMatrix parse_matrix_file(const std::string& path) {
  return parse_matrix_text(read_file(path));
}

std::string format_matrix(const TransferMatrix& A) {
  std::string out = std::to_string(A.size()) + "\n";
  for (Index i = 0; i < A.size(); ++i) {
    for (Index j = 0; j < A.size(); ++j) {
      out += j > 0 ? " " : "";
      out += A.allows(i, j) ? "1" : "0";
    }
    out += "\n";
  }
  return out;
}

MarkovMeasure parse_measure_text(std::string_view text) {
  TokenCursor cursor(tokenize(text));
  const Token& size_token = cursor.next("alphabet size");
  long m = parse_long(size_token, "alphabet size");
  if (m < 2 || m > 1024) {
    throw ParseError("alphabet size must lie in [2,1024], got " + size_token.text,
                     size_token.line, size_token.column);
  }
  Vector initial(m);
  for (long i = 0; i < m; ++i) {
    initial(i) = parse_real(cursor.next("initial probability"), "initial probability");
  }
  Matrix transitions(m, m);
  Matrix01 support(m, m);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      double p = parse_real(cursor.next("transition probability"), "transition probability");
      transitions(i, j) = p;
      support(i, j) = p > 0.0 ? 1 : 0;
    }
  }
  cursor.expect_done();
  // The allowed-pair pattern is exactly the positive transitions, so the
  // measure file stands alone; pair it with a wider matrix by constructing
  // MarkovMeasure directly if needed.
  return MarkovMeasure(TransferMatrix(std::move(support)), std::move(initial),
                       std::move(transitions));
}

MarkovMeasure parse_measure_file(const std::string& path) {
  return parse_measure_text(read_file(path));
}

std::string format_measure(const MarkovMeasure& mu) {
  const Index m = mu.size();
  std::string out = std::to_string(m) + "\n";
  for (Index i = 0; i < m; ++i) {
    out += i > 0 ? " " : "";
    out += format_double(mu.initial()(i));
  }
  out += "\n";
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      out += j > 0 ? " " : "";
      out += format_double(mu.transitions()(i, j));
    }
    out += "\n";
  }
  return out;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "'; expected table, json, or csv");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_dimension_report(const DimensionReport& r, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::kTable: {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"hausdorff", format_double(r.hausdorff)},
          {"hausdorff_bound", format_double(r.hausdorff_bound)},
          {"minkowski", format_double(r.minkowski)},
          {"minkowski_bound", format_double(r.minkowski_bound)},
          {"dims_equal", r.dims_equal ? "true" : "false"},
      };
      if (r.golden_p) rows.emplace_back("golden_p", format_double(*r.golden_p));
      rows.emplace_back("series_depth", std::to_string(r.series_depth));
      rows.emplace_back("solver_iterations", std::to_string(r.solver_iterations));
      rows.emplace_back("solver_residual", format_double(r.solver_residual));
      rows.emplace_back("tol", format_double(r.tol));
      return kv_table(rows);
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["schema"] = "multishift.dimension-report/1";
      j["hausdorff"] = r.hausdorff;
      j["hausdorff_bound"] = r.hausdorff_bound;
      j["minkowski"] = r.minkowski;
      j["minkowski_bound"] = r.minkowski_bound;
      j["dims_equal"] = r.dims_equal;
      j["golden_p"] = r.golden_p ? ordered_json(*r.golden_p) : ordered_json(nullptr);
      j["series_depth"] = r.series_depth;
      j["solver_iterations"] = r.solver_iterations;
      j["solver_residual"] = r.solver_residual;
      j["tol"] = r.tol;
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      return csv_table({"hausdorff", "hausdorff_bound", "minkowski", "minkowski_bound",
                        "dims_equal", "golden_p", "series_depth", "solver_iterations",
                        "solver_residual", "tol"},
                       {{format_double(r.hausdorff), format_double(r.hausdorff_bound),
                         format_double(r.minkowski), format_double(r.minkowski_bound),
                         r.dims_equal ? "true" : "false",
                         r.golden_p ? format_double(*r.golden_p) : "",
                         std::to_string(r.series_depth), std::to_string(r.solver_iterations),
                         format_double(r.solver_residual), format_double(r.tol)}});
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_verdicts(const std::vector<OracleVerdict>& vs, ReportFormat fmt) {
  std::size_t failed = 0;
  for (const auto& v : vs) {
    if (!v.passed) ++failed;
  }
  switch (fmt) {
    case ReportFormat::kTable: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : vs) {
        rows.push_back({v.check, v.instance, format_double(v.analytic),
                        format_double(v.oracle), format_double(v.discrepancy),
                        v.passed ? "pass" : "FAIL"});
      }
      std::string out =
          grid_table({"check", "instance", "analytic", "oracle", "discrepancy", "pass"}, rows);
      out += failed == 0 ? "all " + std::to_string(vs.size()) + " checks passed\n"
                         : std::to_string(failed) + " of " + std::to_string(vs.size()) +
                               " checks FAILED\n";
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["schema"] = "multishift.verdicts/1";
      j["all_passed"] = failed == 0;
      j["verdicts"] = ordered_json::array();
      for (const auto& v : vs) {
        ordered_json item;
        item["check"] = v.check;
        item["instance"] = v.instance;
        item["analytic"] = v.analytic;
        item["oracle"] = v.oracle;
        item["discrepancy"] = v.discrepancy;
        item["tolerance"] = v.tolerance;
        item["exact"] = v.exact;
        item["passed"] = v.passed;
        j["verdicts"].push_back(std::move(item));
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : vs) {
        rows.push_back({v.check, v.instance, format_double(v.analytic),
                        format_double(v.oracle), format_double(v.discrepancy),
                        v.passed ? "true" : "false"});
      }
      return csv_table({"check", "instance", "analytic", "oracle", "discrepancy", "pass"},
                       rows);
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_sample_batch(const SampleBatch& b, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::kTable: {
      return kv_table({
          {"seed", std::to_string(b.seed)},
          {"n", std::to_string(b.n)},
          {"dyadic_length", b.dyadic_length ? "true" : "false"},
          {"count", std::to_string(b.words.size())},
          {"local_dim_mean", format_double(b.mean)},
          {"local_dim_stddev", format_double(b.stddev)},
      });
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["schema"] = "multishift.samples/1";
      j["seed"] = b.seed;
      j["n"] = b.n;
      j["dyadic_length"] = b.dyadic_length;
      j["count"] = b.words.size();
      j["local_dim_mean"] = b.mean;
      j["local_dim_stddev"] = b.stddev;
      j["samples"] = ordered_json::array();
      for (std::size_t i = 0; i < b.words.size(); ++i) {
        ordered_json item;
        item["index"] = i;
        item["word"] = b.words[i].str();
        item["local_dim"] = b.local_dims[i];
        j["samples"].push_back(std::move(item));
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows;
      rows.reserve(b.words.size());
      for (std::size_t i = 0; i < b.words.size(); ++i) {
        rows.push_back({std::to_string(i), b.words[i].str(), format_double(b.local_dims[i])});
      }
      return csv_table({"index", "word", "local_dim"}, rows);
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_series_report(const SeriesReport& s, ReportFormat fmt) {
  const std::vector<double> running = entropy_running(s.entropy);
  const std::size_t depth = std::max(s.minkowski_partials.size(), s.entropy.terms.size());
  switch (fmt) {
    case ReportFormat::kTable: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t k = 0; k < depth; ++k) {
        rows.push_back(
            {std::to_string(k + 1),
             k < s.minkowski_partials.size() ? format_double(s.minkowski_partials[k]) : "-",
             k < s.entropy.terms.size() ? format_double(s.entropy.terms[k]) : "-",
             k < running.size() ? format_double(running[k]) : "-"});
      }
      std::string out = grid_table(
          {"k", "minkowski_partial", "entropy_term", "entropy_partial"}, rows);
      out += "\n" + kv_table({
                        {"tol", format_double(s.tol)},
                        {"entropy_depth", std::to_string(s.entropy.depth)},
                        {"entropy_partial", format_double(s.entropy.partial)},
                        {"entropy_tail_bound", format_double(s.entropy.tail_bound)},
                    });
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["schema"] = "multishift.series/1";
      j["tol"] = s.tol;
      j["minkowski_partials"] = s.minkowski_partials;
      j["entropy"] = {{"depth", s.entropy.depth},
                      {"terms", s.entropy.terms},
                      {"partial", s.entropy.partial},
                      {"tail_bound", s.entropy.tail_bound}};
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t k = 0; k < depth; ++k) {
        rows.push_back(
            {std::to_string(k + 1),
             k < s.minkowski_partials.size() ? format_double(s.minkowski_partials[k]) : "",
             k < s.entropy.terms.size() ? format_double(s.entropy.terms[k]) : "",
             k < running.size() ? format_double(running[k]) : ""});
      }
      return csv_table({"k", "minkowski_partial", "entropy_term", "entropy_partial"}, rows);
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_optimize_report(const OptimizeResult& r, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::kTable: {
      std::string out = kv_table({
          {"s_value", format_double(r.s_value)},
          {"series_bits", format_double(r.series_bits)},
          {"starts", std::to_string(r.starts)},
          {"iterations", std::to_string(r.iterations)},
      });
      out += "measure\n" + format_measure(r.measure);
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json j;
      j["schema"] = "multishift.optimize/1";
      j["s_value"] = r.s_value;
      j["series_bits"] = r.series_bits;
      j["starts"] = r.starts;
      j["iterations"] = r.iterations;
      j["measure"] = measure_json(r.measure);
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::vector<std::string> header = {"s_value", "series_bits", "starts", "iterations"};
      std::vector<std::string> row = {format_double(r.s_value), format_double(r.series_bits),
                                      std::to_string(r.starts), std::to_string(r.iterations)};
      const Index m = r.measure.size();
      for (Index i = 0; i < m; ++i) {
        header.push_back("initial_" + std::to_string(i));
        row.push_back(format_double(r.measure.initial()(i)));
      }
      for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
          header.push_back("p_" + std::to_string(i) + "_" + std::to_string(j));
          row.push_back(format_double(r.measure.transitions()(i, j)));
        }
      }
      return csv_table(header, {row});
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace multishift
