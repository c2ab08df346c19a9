#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "multishift/dimension.hpp"
#include "multishift/transfer_matrix.hpp"
#include "multishift/types.hpp"

using namespace multishift;

namespace {

// reference values, frozen to full double precision
constexpr double kGoldenHausdorff = 0.81137046275164909162;
constexpr double kGoldenMinkowski = 0.82429360571159266578;
constexpr double kGoldenP = 0.56984029099805326591;
constexpr double kGoldenT0 = 1.7548776662466927601;  // 1 / kGoldenP
constexpr double kGoldenT1 = 1.3247179572447460260;

TransferMatrix circulant3() {
  Matrix01 e(3, 3);
  e << 1, 1, 0, 0, 1, 1, 1, 0, 1;
  return TransferMatrix(e);
}

}  // namespace

TEST_CASE("t-system solution on the golden matrix") {
  const TransferMatrix g = TransferMatrix::golden_mean();
  const TVector t = solve_t_system(g, 1e-12);
  REQUIRE(t.values.size() == 2);
  CHECK(std::fabs(t.values[0] - kGoldenT0) < 1e-10);
  CHECK(std::fabs(t.values[1] - kGoldenT1) < 1e-10);
  CHECK(t.residual <= 1e-12);
  CHECK(t.iterations > 0);

  // the first component is the reciprocal of the golden parameter
  CHECK(std::fabs(t.values[0] * kGoldenP - 1.0) < 1e-12);

  // componentwise defining equations, recomputed here
  const double r0 = t.values[0] * t.values[0] - (t.values[0] + t.values[1]);
  const double r1 = t.values[1] * t.values[1] - t.values[0];
  CHECK(std::fabs(r0) <= t.residual + 1e-15);
  CHECK(std::fabs(r1) <= t.residual + 1e-15);

  for (Index i = 0; i < 2; ++i) {
    CHECK(t.values[i] > 1.0);
    CHECK(t.values[i] <= 2.0);
  }
}

TEST_CASE("t-system on full shifts is exact") {
  for (Index m : {2, 3, 4}) {
    const TVector t = solve_t_system(TransferMatrix::full_shift(m), 1e-10);
    for (Index i = 0; i < m; ++i) {
      CHECK(t.values[i] == static_cast<double>(m));
    }
    CHECK(t.residual == 0.0);
  }
}

TEST_CASE("t-system input validation") {
  CHECK_THROWS_AS((void)solve_t_system(TransferMatrix::golden_mean(), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)solve_t_system(TransferMatrix::golden_mean(), -1e-8),
                  std::invalid_argument);
  Matrix01 swap_entries(2, 2);
  swap_entries << 0, 1, 1, 0;
  CHECK_THROWS_AS((void)solve_t_system(TransferMatrix{swap_entries}, 1e-10),
                  NotPrimitiveError);
}

TEST_CASE("hausdorff dimension") {
  const HausdorffResult h = hausdorff_dimension(TransferMatrix::golden_mean(), 1e-12);
  CHECK(std::fabs(h.value - kGoldenHausdorff) < 1e-9);
  CHECK(std::fabs(h.value - kGoldenHausdorff) <= h.bound + 1e-15);
  CHECK(h.bound >= 0.0);
  CHECK(h.bound < 1e-9);

  const HausdorffResult full = hausdorff_dimension(TransferMatrix::full_shift(3), 1e-10);
  CHECK(full.value == 1.0);
  CHECK(full.bound == 0.0);
}

TEST_CASE("minkowski dimension") {
  const MinkowskiResult mk = minkowski_dimension(TransferMatrix::golden_mean(), 1e-12);
  // the partial sum sits below the limit, within the certified tail
  CHECK(mk.value <= kGoldenMinkowski + 1e-15);
  CHECK(kGoldenMinkowski - mk.value <= mk.bound);
  CHECK(std::fabs(mk.value - kGoldenMinkowski) < 1e-9);
  CHECK(mk.bound <= 1e-12);
  CHECK(mk.depth > 0);

  const MinkowskiResult full = minkowski_dimension(TransferMatrix::full_shift(2), 1e-10);
  CHECK(std::fabs(full.value - 1.0) <= full.bound);
}

TEST_CASE("minkowski partial sums") {
  const std::vector<double> expected = {0.25, 0.44812031259014452268, 0.59324081852060466942,
                                        0.68699081852060466942};
  const std::vector<double> partials =
      minkowski_partial_sums(TransferMatrix::golden_mean(), 4);
  REQUIRE(partials.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::fabs(partials[k] - expected[k]) < 1e-12);
  }

  // the first term is 2^(-2) log_m(m) regardless of the matrix, and the
  // series climbs monotonically
  for (const TransferMatrix& A :
       {TransferMatrix::golden_mean(), circulant3(), TransferMatrix::full_shift(4)}) {
    const std::vector<double> s = minkowski_partial_sums(A, 60);
    CHECK(s[0] == 0.25);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(s.back() <= 1.0 + 1e-12);
  }
}

TEST_CASE("minkowski scale rate") {
  // at the coarsest dyadic scale the rate is (1/2) log2(3): four raw pairs,
  // three admissible
  const double rate1 = minkowski_scale_rate(TransferMatrix::golden_mean(), 1);
  CHECK(std::fabs(rate1 - 0.5 * std::log2(3.0)) < 1e-13);

  for (int ell = 1; ell <= 6; ++ell) {
    CHECK(minkowski_scale_rate(TransferMatrix::full_shift(2), ell) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("equal row sums force equal dimensions") {
  const TransferMatrix c3 = circulant3();
  CHECK(dims_equal_verdict(c3));
  CHECK_FALSE(dims_equal_verdict(TransferMatrix::golden_mean()));

  const double closed = 0.81546487678572871855;  // (1/2) log_3(6)
  const HausdorffResult h = hausdorff_dimension(c3, 1e-12);
  const MinkowskiResult mk = minkowski_dimension(c3, 1e-12);
  CHECK(std::fabs(h.value - closed) < 1e-9);
  CHECK(std::fabs(mk.value - closed) < 1e-9);
  CHECK(std::fabs(h.value - closed) <= h.bound + 1e-15);
  CHECK(kGoldenMinkowski != closed);  // distinct systems, nearby values
}

TEST_CASE("golden parameter root") {
  const double p = solve_golden_p(1e-13);
  CHECK(std::fabs(p - kGoldenP) < 1e-12);
  CHECK(std::fabs(p * p * p - (1.0 - p) * (1.0 - p)) < 1e-12);
  CHECK(std::fabs(-std::log2(p) - kGoldenHausdorff) < 1e-7);
  CHECK_THROWS_AS((void)solve_golden_p(0.0), std::invalid_argument);
}

TEST_CASE("golden matrix recognizer") {
  CHECK(is_golden_matrix(TransferMatrix::golden_mean()));
  CHECK_FALSE(is_golden_matrix(TransferMatrix::full_shift(2)));
  CHECK_FALSE(is_golden_matrix(circulant3()));
}

TEST_CASE("dimension report") {
  const DimensionReport r = dimension_report(TransferMatrix::golden_mean(), 1e-10);
  CHECK(std::fabs(r.hausdorff - kGoldenHausdorff) <= r.hausdorff_bound + 1e-15);
  CHECK(kGoldenMinkowski - r.minkowski <= r.minkowski_bound);
  CHECK(r.minkowski <= kGoldenMinkowski + 1e-15);
  CHECK_FALSE(r.dims_equal);
  REQUIRE(r.golden_p.has_value());
  CHECK(std::fabs(*r.golden_p - kGoldenP) < 1e-12);
  CHECK(r.series_depth > 0);
  CHECK(r.solver_iterations > 0);
  CHECK(r.solver_residual <= 1e-10);
  CHECK(r.tol == 1e-10);

  // the strict gap survives both certified bounds
  CHECK(r.hausdorff + r.hausdorff_bound < r.minkowski - r.minkowski_bound);

  const DimensionReport full = dimension_report(TransferMatrix::full_shift(2), 1e-10);
  CHECK(full.dims_equal);
  CHECK_FALSE(full.golden_p.has_value());
  CHECK(full.hausdorff == 1.0);
}
