#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/experiments.hpp"

namespace {

using namespace mixedweak;

double plateau_sum(int k_max) {
  double s = 0.0;
  for (int k = 11; k <= k_max; ++k) {
    s += 15.0 / (32.0 * k * std::log(static_cast<double>(k)));
  }
  return s;
}

TEST(Counterexample, ClosedFormMatchesPlainSummation) {
  for (int k_max : {100, 1000, 10000}) {
    const double expected = plateau_sum(k_max);
    EXPECT_NEAR(sawyer_lhs_closed_form(k_max), expected, 1e-12 * expected);
  }
}

TEST(Counterexample, ClosedFormGrowsLikeLogLog) {
  // sum_{11..K} 15/(32 k ln k) ~ (15/32)(ln ln K - ln ln 11)
  const double lo = sawyer_lhs_closed_form(100);
  const double hi = sawyer_lhs_closed_form(100000);
  EXPECT_GE(hi / lo, 1.5);
  EXPECT_NEAR(hi - lo,
              15.0 / 32.0 * (std::log(std::log(1e5)) -
                             std::log(std::log(100.0))),
              0.02);
}

TEST(Counterexample, WindowedMeasureMatchesClosedForm) {
  const CounterexampleReport rep = sawyer_counterexample(100);
  EXPECT_EQ(rep.k_max, 100);
  EXPECT_DOUBLE_EQ(rep.dx_window, 1.0 / 3200.0);
  EXPECT_DOUBLE_EQ(rep.dx_bulk, 1.0 / 16.0);
  ASSERT_EQ(rep.per_k_terms.size(), 90u);
  EXPECT_NEAR(rep.lhs_partial, rep.lhs_closed_form,
              0.01 * rep.lhs_closed_form);
  for (double term : rep.per_k_terms) EXPECT_GT(term, 0.0);
  // plateau k = 100 carries mass (k/ln k) * int_{1/(4k)}^{1/k} s ds
  const double k100 = 15.0 / (32.0 * 100.0 * std::log(100.0));
  EXPECT_NEAR(rep.per_k_terms.back(), k100, 0.01 * k100);
}

TEST(Counterexample, DenseGridCrossValidatesTheWindows) {
  const CounterexampleReport rep = sawyer_counterexample(100);
  const double dense = sawyer_lhs_dense(100, 1.0 / 3200.0);
  EXPECT_NEAR(dense, rep.lhs_partial, 1e-10 * rep.lhs_partial);
}

TEST(Counterexample, LeftSideGrowsWithKmaxWhileRightSideStabilizes) {
  const CounterexampleReport a = sawyer_counterexample(100);
  const CounterexampleReport b = sawyer_counterexample(200);
  EXPECT_GT(b.lhs_partial, a.lhs_partial);
  EXPECT_GT(a.rhs_estimate, 0.0);
  EXPECT_LT(a.rhs_estimate, 20.0);
  EXPECT_GT(a.m2u_max_on_unit, 0.0);
  EXPECT_LT(a.m2u_max_on_unit, 10.0);
  EXPECT_NEAR(b.m2u_max_on_unit, a.m2u_max_on_unit,
              0.10 * a.m2u_max_on_unit);
}

TEST(Counterexample, DeterministicAcrossRuns) {
  const CounterexampleReport a = sawyer_counterexample(120);
  const CounterexampleReport b = sawyer_counterexample(120);
  EXPECT_EQ(a.lhs_partial, b.lhs_partial);
  EXPECT_EQ(a.rhs_estimate, b.rhs_estimate);
  EXPECT_EQ(a.per_k_terms, b.per_k_terms);
}

TEST(Counterexample, RejectsCoarseOrTinyConfigurations) {
  EXPECT_THROW(sawyer_counterexample(99), ValidationError);
  EXPECT_THROW(sawyer_counterexample(100, 1.0 / 800.0), ResolutionError);
  EXPECT_THROW(sawyer_lhs_dense(100, 1.0 / 100.0), ResolutionError);
  EXPECT_THROW(sawyer_lhs_dense(99, 1.0 / 3200.0), ValidationError);
  EXPECT_THROW(sawyer_lhs_closed_form(10), ValidationError);
  // dx exactly at the resolution limit is allowed
  EXPECT_NO_THROW(sawyer_counterexample(100, 1.0 / 1600.0));
}

}  // namespace
