#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/maximal.hpp"
#include "mixedweak/rubio.hpp"
#include "mixedweak/weight_constants.hpp"
#include "support/oracles.hpp"

using namespace mixedweak;

namespace {

RubioConfig unit_config(const Grid& g, double k0, int j_max = 30) {
  RubioConfig c;
  c.u = StepFunction::constant(g, 1.0);
  c.v1 = StepFunction::constant(g, 1.0);
  c.lambda = 2.0;
  c.delta = 0.5;
  c.j_max = j_max;
  c.k0 = k0;
  return c;
}

}  // namespace

TEST(Rubio, ConfigValidation) {
  Grid g(0.0, 0.25, 4);
  RubioConfig c = unit_config(g, 1.0);
  EXPECT_NO_THROW(RubioMachine{c});
  c.lambda = 1.0;
  EXPECT_THROW(RubioMachine{c}, ValidationError);
  c = unit_config(g, 1.0);
  c.delta = 0.0;
  EXPECT_THROW(RubioMachine{c}, ValidationError);
  c = unit_config(g, 1.0);
  c.j_max = -1;
  EXPECT_THROW(RubioMachine{c}, ValidationError);
  c = unit_config(g, 1.0);
  c.q = 0.5;
  EXPECT_THROW(RubioMachine{c}, ValidationError);
  c = unit_config(g, 1.0);
  c.u = StepFunction(g, {1.0, 0.0, 1.0, 1.0});  // W vanishes on an active cell
  EXPECT_THROW(RubioMachine{c}, ZeroWeightError);
}

TEST(Rubio, CertExponentDefaultsToFourLambda) {
  Grid g(0.0, 0.25, 4);
  RubioMachine m(unit_config(g, 1.0));
  EXPECT_DOUBLE_EQ(m.cert_exponent(), 8.0);
  RubioConfig c = unit_config(g, 1.0);
  c.q = 4.0;
  EXPECT_DOUBLE_EQ(RubioMachine(c).cert_exponent(), 4.0);
}

TEST(Rubio, SLambdaIsMaximalWhenWeightsAreOne) {
  Grid g(0.0, 1.0 / 64.0, 64);
  std::mt19937_64 rng(42);
  StepFunction f = oracles::random_step(g, rng);
  RubioMachine m(unit_config(g, 1.0));
  StepFunction sf = m.s_lambda(f);
  StepFunction mf = maximal_fast(f);
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_NEAR(sf.values[i], mf.values[i], 1e-13);
  }
}

TEST(Rubio, SLambdaHomogeneousAndMonotone) {
  Grid g(0.0, 1.0 / 32.0, 32);
  std::mt19937_64 rng(314);
  StepFunction u = oracles::random_positive_step(g, rng);
  StepFunction v1 = oracles::random_positive_step(g, rng);
  RubioConfig c;
  c.u = u;
  c.v1 = v1;
  c.k0 = 1.0;
  RubioMachine m(c);
  StepFunction f = oracles::random_step(g, rng);
  StepFunction sf = m.s_lambda(f);
  StepFunction s2f = m.s_lambda(scale(f, 2.0));
  std::vector<double> bumped = f.values;
  for (double& x : bumped) x += 0.25;
  StepFunction sg = m.s_lambda(StepFunction(g, bumped));
  for (std::size_t i = 0; i < 32; ++i) {
    EXPECT_NEAR(s2f.values[i], 2.0 * sf.values[i], 1e-12);
    EXPECT_GE(sg.values[i], sf.values[i] * (1.0 - 1e-12));
  }
  StepFunction s0 = m.s_lambda(StepFunction::zeros(g));
  for (double v : s0.values) EXPECT_DOUBLE_EQ(v, 0.0);
}

TEST(Rubio, GeometricSeriesClosedForm) {
  // u = v1 = 1, h constant: S^j h = h, so R_J h = h * sum (2 k0)^{-j}
  Grid g(0.0, 1.0 / 64.0, 64);
  const int J = 30;
  RubioMachine m(unit_config(g, 1.0, J));
  StepFunction h = StepFunction::constant(g, 3.0);
  RubioIteration it = m.iterate(h);
  const double expect_rj = 3.0 * (2.0 - std::pow(0.5, J));
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_NEAR(it.r_j.values[i], expect_rj, 1e-12 * expect_rj);
  }
  // terms j = 0..J+1 inclusive, term 0 is h itself
  ASSERT_EQ(it.term_norms.size(), static_cast<std::size_t>(J + 2));
  for (int j = 0; j <= J + 1; ++j) {
    EXPECT_NEAR(it.term_norms[j], 3.0 * std::pow(0.5, j),
                1e-10 * it.term_norms[j] + 1e-300);
  }
  EXPECT_NEAR(it.decay_rho, 0.5, 1e-9);
}

TEST(Rubio, VerifyConstantCase) {
  Grid g(0.0, 1.0 / 64.0, 64);
  RubioMachine m(unit_config(g, 1.0));
  RubioVerification v = m.verify(StepFunction::constant(g, 2.0));
  EXPECT_TRUE(v.prop_a);
  EXPECT_TRUE(v.prop_c);
  EXPECT_NEAR(v.prop_b_ratio, 2.0, 1e-8);
  EXPECT_LE(v.prop_c_max_defect, 1e-9);
}

TEST(Rubio, JmaxZeroKeepsH) {
  Grid g(0.0, 0.25, 16);
  RubioMachine m(unit_config(g, 1.0, 0));
  StepFunction h = StepFunction::constant(g, 1.0);
  RubioIteration it = m.iterate(h);
  for (double x : it.r_j.values) EXPECT_DOUBLE_EQ(x, 1.0);
  RubioVerification v = m.verify(h);
  EXPECT_TRUE(v.prop_a);
  EXPECT_TRUE(v.prop_c);
}

TEST(Rubio, TinyK0Diverges) {
  Grid g(0.0, 1.0 / 32.0, 32);
  RubioMachine m(unit_config(g, 0.01));
  EXPECT_THROW(m.iterate(StepFunction::constant(g, 1.0)), DivergenceError);
}

TEST(Rubio, EstimateAtLeastTwoAndValidatesProbes) {
  Grid g(0.0, 1.0 / 64.0, 64);
  RubioMachine m(unit_config(g, 1.0));
  EXPECT_THROW(m.estimate_norm_bound(8, 1), ValidationError);
  const double k0 = m.estimate_norm_bound(32, 1);
  // the battery includes the constant probe, and S(1) >= 1 pointwise
  EXPECT_GE(k0, 2.0 * (1.0 - 1e-12));
}

TEST(Rubio, EstimateDeterministicPerSeed) {
  Grid g(0.0, 1.0 / 64.0, 64);
  std::mt19937_64 rng(5150);
  RubioConfig c;
  c.u = oracles::random_positive_step(g, rng);
  c.v1 = oracles::random_positive_step(g, rng);
  c.k0 = 1.0;
  RubioMachine m(c);
  EXPECT_DOUBLE_EQ(m.estimate_norm_bound(24, 7), m.estimate_norm_bound(24, 7));
  // free-function wrapper agrees with the machine
  EXPECT_DOUBLE_EQ(estimate_norm_bound(c, 24, 7), m.estimate_norm_bound(24, 7));
}

TEST(Rubio, EstimateTracksExhaustiveBlockBattery) {
  // exhaustive two-valued contiguous blocks: the probe estimate must land
  // within a factor 4 of twice the exhaustive best ratio
  Grid g(0.0, 1.0 / 64.0, 64);
  RubioMachine m(unit_config(g, 1.0));
  double best = 0.0;
  for (std::size_t i = 0; i < 64; ++i) {
    for (std::size_t j = i; j < 64; ++j) {
      for (int level = 1; level <= 3; ++level) {
        std::vector<double> v(64, 1.0);
        for (std::size_t c = i; c <= j; ++c) v[c] = std::pow(2.0, level);
        StepFunction p(g, v);
        const double denom = m.cert_norm(p);
        if (denom == 0.0) continue;
        best = std::max(best, m.cert_norm(m.s_lambda(p)) / denom);
      }
    }
  }
  const double estimate = m.estimate_norm_bound(32, 3);
  EXPECT_GE(estimate, 2.0 * best / 4.0);
  EXPECT_LE(estimate, 2.0 * best * 4.0);
}

TEST(Rubio, RandomProfilesSatisfyProperties) {
  std::mt19937_64 rng(2718);
  Grid g(0.0, 1.0 / 64.0, 64);
  StepFunction u = oracles::random_positive_step(g, rng, 0.5, 2.0);
  StepFunction v1 = oracles::random_positive_step(g, rng, 0.5, 2.0);
  RubioConfig c;
  c.u = u;
  c.v1 = v1;
  c.j_max = 25;
  RubioMachine probe(c);
  c.k0 = probe.estimate_norm_bound(32, 11);
  RubioMachine m(c);
  for (int rep = 0; rep < 10; ++rep) {
    StepFunction h = oracles::random_step(g, rng, 0.2);
    if (integrate(h) == 0.0) continue;
    RubioVerification v = m.verify(h);
    EXPECT_TRUE(v.prop_a) << "rep " << rep;
    EXPECT_TRUE(v.prop_c) << "rep " << rep;
    EXPECT_LE(v.iteration.decay_rho, 0.9) << "rep " << rep;
    EXPECT_GE(v.prop_b_ratio, 1.0 - 1e-12) << "rep " << rep;
  }
}

TEST(Rubio, MajorantHasBoundedA1) {
  Grid g(0.0, 1.0 / 256.0, 256);
  RubioConfig c = unit_config(g, 0.0, 25);
  RubioMachine probe(unit_config(g, 1.0, 25));
  const double k0 = probe.estimate_norm_bound(32, 21);
  c.k0 = k0;
  RubioMachine m(c);
  std::mt19937_64 rng(1234);
  StepFunction h = oracles::random_step(g, rng, 0.3);
  RubioIteration it = m.iterate(h);
  ConstantEstimate a1 = a1_constant(it.r_j, IntervalFamily::all(256));
  EXPECT_LE(a1.value, 2.0 * k0 * 1.01);
}

TEST(Rubio, WrappersMatchMachine) {
  Grid g(0.0, 1.0 / 32.0, 32);
  RubioConfig c = unit_config(g, 1.0, 10);
  StepFunction h = StepFunction::constant(g, 1.0);
  RubioMachine m(c);
  StepFunction a = s_lambda_op(h, c);
  StepFunction b = m.s_lambda(h);
  for (std::size_t i = 0; i < 32; ++i) EXPECT_DOUBLE_EQ(a.values[i], b.values[i]);
  RubioVerification v1 = rubio_verify(h, c);
  RubioVerification v2 = m.verify(h);
  EXPECT_EQ(v1.prop_a, v2.prop_a);
  EXPECT_DOUBLE_EQ(v1.prop_b_ratio, v2.prop_b_ratio);
  RubioIteration i1 = rubio_iterate(h, c);
  EXPECT_DOUBLE_EQ(i1.decay_rho, m.iterate(h).decay_rho);
}
