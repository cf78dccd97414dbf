#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mixedweak/step_function.hpp"

namespace mixedweak {

// The measure w dx induced by a nonnegative step density.
struct WeightedMeasure {
  StepFunction density;
};

enum class MixedOperator {
  MOfFvOverV,  // T = M(f v) / v
  MOfF,        // T = M f / v
};

enum class RhsWeight { Mu, M2u, U };

struct MixedReport {
  double sup_t_lhs = 0.0;
  double maximizing_t = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool zero_rhs = false;
  std::size_t t_grid_size = 0;  // distinct levels enumerated for the sup
  double dx = 0.0;
  std::size_t n_cells = 0;
  double origin_gap = 0.0;
};

// sup_{t>0} t * mu{f > t}^{1/p}, exact: the sup is attained as t approaches a
// distinct value d of f from below, where mu{f > t} = mu{f >= d}.
double weak_norm(const StepFunction& f, double p, const WeightedMeasure& mu);

struct WeakSupPoint {
  double sup = 0.0;
  double maximizing_t = 0.0;
  std::size_t levels = 0;  // distinct positive values enumerated
};

WeakSupPoint weak_norm_argmax(const StepFunction& f, double p,
                              const WeightedMeasure& mu);

// int_0^infty mu{f > t}^{1/p} dt as a finite layer-cake sum over the sorted
// distinct values of f.
double lorentz_p1_norm(const StepFunction& f, double p,
                       const WeightedMeasure& mu);

// Weak-type functional sup_t t*(uv){T > t} against rhs = int f * W * v dx,
// W in {Mu, M^2u, u}.  The (MOfF, M2u) pair instead uses rhs = int f * M^2u dx,
// the threshold form with v absorbed.
MixedReport evaluate_mixed_inequality(const StepFunction& f,
                                      const StepFunction& u,
                                      const StepFunction& v, MixedOperator op,
                                      RhsWeight rhs_weight);

struct HolderWeakRecord {
  double lhs = 0.0;
  double rhs_product = 0.0;
  double ratio = 0.0;
};

// Compares ||prod h_j||_{L^{q,inf}(mu)} with prod_j ||h_j||_{L^{q_j,inf}(mu)}.
// Requires sum 1/q_j = 1/q within 1e-12.
HolderWeakRecord holder_weak_check(std::span<const StepFunction> hs,
                                   std::span<const double> qs, double q,
                                   const WeightedMeasure& mu);

}  // namespace mixedweak
