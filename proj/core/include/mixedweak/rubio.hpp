#pragma once

#include <cstdint>
#include <vector>

#include "mixedweak/norms.hpp"
#include "mixedweak/step_function.hpp"

namespace mixedweak {

// Inputs for the iteration operator S f = M(f W)/W with W = u * v1^{1/(lambda
// delta)}.  q is the exponent of the certification norm L^{q,1}(u v1^{1/delta});
// q = 0 selects the default 4*lambda.  k0 must be set to a positive operator
// norm bound before iterating.
struct RubioConfig {
  StepFunction u;
  StepFunction v1;
  double lambda = 2.0;
  double delta = 0.5;
  int j_max = 30;
  double k0 = 0.0;
  double q = 0.0;
};

struct RubioIteration {
  StepFunction r_j;         // sum_{j<=J} S^j h / (2 k0)^j
  StepFunction r_j1;        // one further term
  std::vector<double> term_norms;
  double decay_rho = 0.0;   // max ratio over the certified tail
};

struct RubioVerification {
  bool prop_a = false;        // h <= R_J h cellwise, exact
  double prop_b_ratio = 0.0;  // ||R_J h|| / ||h|| in the certification norm
  bool prop_c = false;        // S(R_J h) <= 2 k0 R_{J+1} h within 1e-9 rel
  double prop_c_max_defect = 0.0;
  RubioIteration iteration;
};

// Caches the sampled weights of a config so repeated applications share them.
class RubioMachine {
 public:
  explicit RubioMachine(RubioConfig cfg);

  const RubioConfig& config() const { return cfg_; }
  const StepFunction& weight() const { return weight_; }
  const StepFunction& uv() const { return uv_; }
  double cert_exponent() const { return q_; }

  StepFunction s_lambda(const StepFunction& f) const;
  double cert_norm(const StepFunction& f) const;
  // 2 x the largest single-application norm growth over a deterministic probe
  // battery (spikes, power profiles, seeded random two-valued blocks).
  double estimate_norm_bound(int probes, std::uint64_t seed) const;
  // Truncated series; throws DivergenceError unless the last term norms decay
  // with ratio <= 0.9.
  RubioIteration iterate(const StepFunction& h) const;
  RubioVerification verify(const StepFunction& h) const;

 private:
  RubioConfig cfg_;
  double q_;
  StepFunction weight_;
  StepFunction uv_;
};

StepFunction s_lambda_op(const StepFunction& f, const RubioConfig& cfg);
double estimate_norm_bound(const RubioConfig& cfg, int probes,
                           std::uint64_t seed);
RubioIteration rubio_iterate(const StepFunction& h, const RubioConfig& cfg);
RubioVerification rubio_verify(const StepFunction& h, const RubioConfig& cfg);

}  // namespace mixedweak
