#pragma once

#include <span>

#include "mixedweak/interval_family.hpp"
#include "mixedweak/step_function.hpp"

namespace mixedweak {

enum class MaximalKind {
  // sup of averages over all grid-aligned intervals containing the cell
  Uncentered,
  // sup over symmetric index windows [i-w, i+w]; the window length 2w+1 counts
  // in the denominator even where it sticks out of the grid
  Centered,
};

// Reference implementation by direct enumeration, O(n^2).
StepFunction maximal_brute(const StepFunction& f,
                           MaximalKind kind = MaximalKind::Uncentered);

// Same values as maximal_brute.  Uncentered runs as a divide-and-conquer over
// prefix-sum convex hulls: the value at cell i is the largest slope between a
// point (a, P[a]) with a <= i and a point (b, P[b]) with b > i, and for a
// fixed split only hull tangencies matter.  Cost O(n log^2 n).  The centered
// variant is a cross-check tool and delegates to the direct scan.
StepFunction maximal_fast(const StepFunction& f,
                          MaximalKind kind = MaximalKind::Uncentered);

// Uncentered maximal on a raw array of cell values.
std::vector<double> maximal_uncentered_values(std::span<const double> vals);

struct LLogLOptions {
  double rel_tol = 1e-10;
  int max_iter = 200;
};

// Luxemburg norm inf{ l > 0 : avg of phi(f/l) <= 1 } with phi(t) = t ln(e+t),
// for the cell values of one interval.  Zero input gives zero.
double luxemburg_llogl_norm(std::span<const double> cells, LLogLOptions opts = {});

// Orlicz-type maximal: at each cell, the largest Luxemburg norm over family
// intervals containing it.
StepFunction maximal_llogl(const StepFunction& f, const IntervalFamily& family,
                           LLogLOptions opts = {});

// Family-restricted maximal of plain averages.
StepFunction family_maximal(const StepFunction& f, const IntervalFamily& family);

struct VectorMaximal {
  StepFunction lq_of_max;  // (sum_j (M f_j)^q)^{1/q}
  StepFunction max_of_lq;  // M((sum_j f_j^q)^{1/q})
};
VectorMaximal maximal_vector_lq(std::span<const StepFunction> fs, double q,
                                MaximalKind kind = MaximalKind::Uncentered);

// At each cell, the largest product of per-function averages over a family
// interval containing it.
StepFunction multilinear_maximal(std::span<const StepFunction> fs,
                                 const IntervalFamily& family);

}  // namespace mixedweak
