#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multishift {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Matrix01 = Eigen::MatrixXi;

// Word counts grow like lambda^k and leave the 64-bit range near k ~ 90
// already for two symbols; all exact counting goes through BigInt. Kept out
// of Eigen containers: cpp_int's converting constructors are not SFINAE-safe
// against Eigen expression types.
using BigInt = boost::multiprecision::cpp_int;

// Candidate budget for exhaustive enumeration (number of raw words m^k).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct MalformedMatrixError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// No power up to the searched cap is entrywise positive. With the Wielandt
// cap (m-1)^2+1 this is a definitive verdict, not a timeout.
struct NotPrimitiveError : std::runtime_error {
  explicit NotPrimitiveError(const std::string& what, int searched_cap = 0)
      : std::runtime_error(what), cap(searched_cap) {}
  int cap = 0;
};

struct MalformedMeasureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EnumerationTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& what, int iters)
      : std::runtime_error(what), iterations(iters) {}
  int iterations = 0;
};

struct IndexOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotAdmissibleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPowerOfTwoError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_no, int column_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) +
                           ", column " + std::to_string(column_no) + ")"),
        line(line_no),
        column(column_no) {}
  int line = 0;
  int column = 0;
};

}  // namespace multishift
