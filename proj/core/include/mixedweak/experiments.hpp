#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixedweak/interval_family.hpp"
#include "mixedweak/norms.hpp"
#include "mixedweak/step_function.hpp"

namespace mixedweak {

// Root a > 0 of (int_{|y| <= a^{1/(r-1)}} f) * a = lambda, solved by bisection
// on the continuous non-decreasing left side; boundary cells are prorated.
// Stops when the residual is within 1e-8 relative of lambda.
double lemma_local_solve(const StepFunction& f, double r, double lambda);

// Divergent left side vs. finite right side of the threshold inequality with
// the staircase weight u, the sawtooth weight v, and f the unit-interval
// indicator.  lhs_partial is the measured (uv)-measure of {Mf > v};
// lhs_closed_form is the exact per-plateau sum it should match.
struct CounterexampleReport {
  int k_max = 0;
  double dx_window = 0.0;
  double dx_bulk = 0.0;
  double lhs_partial = 0.0;
  double lhs_closed_form = 0.0;
  double rhs_estimate = 0.0;     // integral of M^2 u over [-1,1]
  double m2u_max_on_unit = 0.0;  // max of M^2 u over [-1,1]
  std::vector<double> per_k_terms;
};

// sum over 10 < k <= k_max of 15/(32 k ln k)
double sawyer_lhs_closed_form(int k_max);

// Evaluates the left side per plateau on narrow aligned windows (everywhere
// else the integrand vanishes) and the right side on a coarse grid covering
// [-2, k_max+1].  Pass dx_window <= 0 for the default 1/(32 k_max), dx_bulk
// <= 0 for 1/16.
CounterexampleReport sawyer_counterexample(int k_max, double dx_window = 0.0,
                                           double dx_bulk = 0.0);

// Single uniform grid over [-2, k_max+1]; cross-validates the windowed left
// side at small k_max.
double sawyer_lhs_dense(int k_max, double dx);

// Parallel refinement ladders: point j uses radius_values[j], gap_values[j],
// dx_values[j].  r, u and f combine as a cross product over the ladder.
struct SweepConfig {
  std::vector<double> r_values;
  std::vector<double> radius_values;
  std::vector<double> gap_values;
  std::vector<double> dx_values;
  std::vector<std::string> u_specs;
  std::vector<std::string> f_specs;
  std::uint64_t seed = 0;
};

struct SweepRow {
  double r = 0.0;
  std::string u_spec;
  std::string f_spec;
  double radius = 0.0;
  double gap = 0.0;
  double dx = 0.0;
  MixedReport report;
  bool skipped = false;
  std::string skip_reason;
};

struct SweepSummary {
  double r = 0.0;
  std::string u_spec;
  std::string f_spec;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double variation = 0.0;  // max_ratio / min_ratio
  bool monotone_nondecreasing = false;
  std::size_t rows = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepSummary> summaries;
};

// One mixed-inequality report per (r, u, f, ladder point), with per-(r,u,f)
// ratio aggregation across the ladder.
SweepResult thm2_sweep(const SweepConfig& cfg);

// Weight profile for sweep specs: the descriptor grammar plus
// "twovalued:lo,hi,a,b" (value lo off [a,b], hi on it).
StepFunction build_profile(const std::string& spec, const Grid& g);

// Per-annulus split of g = f*v into near / far / middle pieces with measured
// constants: sublinearity defect of the three-way split, the tail-majorant
// ratio, and the inner-mass ratio, all over the cells of the annulus
// {2^k < |x| <= 2^{k+1}}.
struct AnnuliRecord {
  int k = 0;
  std::size_t cells_in_gk = 0;
  double max_sublinearity_defect = 0.0;  // relative to Mg
  double c_far = 0.0;
  double c_near = 0.0;
};

std::vector<AnnuliRecord> annuli_check(const StepFunction& f,
                                       const StepFunction& v, int k_lo,
                                       int k_hi);

// Range of the cellwise ratio M(Mf) / M_{LlogL}f over all fs and all cells
// where the denominator is positive.
struct RatioBounds {
  double c_lo = 0.0;
  double c_hi = 0.0;
  std::size_t cells_counted = 0;
};

RatioBounds m2_llogl_compare(std::span<const StepFunction> fs,
                             const IntervalFamily& family);

// lhs = sup_t t*(uv){(sum_j M(f_j v)^q)^{1/q} / v > t} against
// rhs = int (sum |f_j|^q)^{1/q} u v dx.
MixedReport vector_valued_check(std::span<const StepFunction> fs, double q,
                                const StepFunction& u, const StepFunction& v);

struct MultilinearRecord {
  bool pointwise_holds = false;   // bilinear maximal <= product of maximals
  double max_pointwise_defect = 0.0;
  double lhs = 0.0;        // ||bilinear maximal / v^2|| weak-1/2 against uv
  double rhs_chain = 0.0;  // product of the factor weak-1 norms
  double rhs_final = 0.0;  // product of int f_j u dx
  double ratio_chain = 0.0;
  double ratio_final = 0.0;
};

MultilinearRecord multilinear_check(const StepFunction& f1,
                                    const StepFunction& f2,
                                    const StepFunction& u,
                                    const StepFunction& v,
                                    const IntervalFamily& family);

}  // namespace mixedweak
