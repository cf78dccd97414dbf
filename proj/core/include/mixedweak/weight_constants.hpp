#pragma once

#include <cstddef>
#include <string>

#include "mixedweak/interval_family.hpp"
#include "mixedweak/step_function.hpp"

namespace mixedweak {

// Result of maximizing a weight functional over an interval family.  The
// maximizing interval is recorded as an inclusive cell range.
struct ConstantEstimate {
  double value = 1.0;
  std::size_t interval_begin = 0;
  std::size_t interval_end = 0;
  std::size_t family_size = 0;
  std::string family_name;
  double dx = 0.0;
  std::size_t n_cells = 0;
  double origin_gap = 0.0;
};

// sup_Q (avg_Q w) / (min over active cells of Q).  Averages count excluded
// cells as zeros; minima ignore them.  Intervals with no active cell are
// skipped.  Requires w > 0 on every active cell.
ConstantEstimate a1_constant(const StepFunction& w, const IntervalFamily& family);

// sup_Q (avg_Q w) * (avg_Q w^{1/(1-p)})^{p-1}, p > 1.
ConstantEstimate ap_constant(const StepFunction& w, double p,
                             const IntervalFamily& family);

// Reverse Holder ratio sup_Q (avg_Q w^s)^{1/s} / (avg_Q w) for finite s > 1;
// pass s = infinity for sup_Q (max_Q w) / (avg_Q w).  w may vanish on cells
// but not on a whole family interval.
ConstantEstimate rh_constant(const StepFunction& w, double s,
                             const IntervalFamily& family);

// Fujii-Wilson functional sup_Q (1/w(Q)) * sum_{i in Q} M(w chi_Q)[i] dx,
// the inner maximal running over subintervals of Q only.
ConstantEstimate ainfty_fw(const StepFunction& w, const IntervalFamily& family);

struct Lemma4Record {
  ConstantEstimate lhs;  // a1 of u * w^eps
  double rhs_bound = 0.0;
  bool holds = false;
};

// Checks a1(u w^eps) <= rh_s(u) * a1(u) * a1(w)^eps with s = 1/(1-eps).
Lemma4Record lemma4_check(const StepFunction& u, const StepFunction& w,
                          double eps, const IntervalFamily& family);

}  // namespace mixedweak
