#include "mixedweak/weight_constants.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/maximal.hpp"
#include "mixedweak/range_stats.hpp"

namespace mixedweak {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_family_fits(const StepFunction& w, const IntervalFamily& family,
                         const char* what) {
  if (family.n_cells() != w.size()) {
    throw ValidationError(std::string(what) +
                          ": family cell count does not match the grid");
  }
}

void require_positive_active(const StepFunction& w, const char* what) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.grid.cell_excluded(i) && w.values[i] <= 0.0) {
      throw ZeroWeightError(std::string(what) +
                            ": weight vanishes on an active cell");
    }
  }
}

ConstantEstimate make_estimate(const StepFunction& w,
                               const IntervalFamily& family) {
  ConstantEstimate e;
  e.family_size = family.size();
  e.family_name = family.name();
  e.dx = w.grid.dx;
  e.n_cells = w.grid.n_cells;
  e.origin_gap = w.grid.origin_gap;
  return e;
}

// min over active cells, +inf on all-excluded ranges
std::vector<double> active_or_inf(const StepFunction& w) {
  std::vector<double> m(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    m[i] = w.grid.cell_excluded(i) ? kInf : w.values[i];
  }
  return m;
}

}  // namespace

ConstantEstimate a1_constant(const StepFunction& w,
                             const IntervalFamily& family) {
  require_family_fits(w, family, "a1_constant");
  require_positive_active(w, "a1_constant");
  const PrefixSums sums(w.values);
  const SparseMinMax mins(active_or_inf(w));
  ConstantEstimate best = make_estimate(w, family);
  best.value = 0.0;
  family.for_each([&](std::size_t i, std::size_t j) {
    const double lo = mins.range_min(i, j);
    if (lo == kInf) return;  // interval lies inside the gap
    const double cand = sums.range_avg(i, j) / lo;
    if (cand > best.value) {
      best.value = cand;
      best.interval_begin = i;
      best.interval_end = j;
    }
  });
  return best;
}

ConstantEstimate ap_constant(const StepFunction& w, double p,
                             const IntervalFamily& family) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ExponentError("ap_constant: requires p > 1");
  }
  require_family_fits(w, family, "ap_constant");
  require_positive_active(w, "ap_constant");
  std::vector<double> dual(w.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.grid.cell_excluded(i)) {
      dual[i] = std::pow(w.values[i], 1.0 / (1.0 - p));
    }
  }
  const PrefixSums sums(w.values);
  const PrefixSums dual_sums(dual);
  ConstantEstimate best = make_estimate(w, family);
  best.value = 0.0;
  family.for_each([&](std::size_t i, std::size_t j) {
    const double cand = sums.range_avg(i, j) *
                        std::pow(dual_sums.range_avg(i, j), p - 1.0);
    if (cand > best.value) {
      best.value = cand;
      best.interval_begin = i;
      best.interval_end = j;
    }
  });
  return best;
}

ConstantEstimate rh_constant(const StepFunction& w, double s,
                             const IntervalFamily& family) {
  if (!(s > 1.0)) {
    throw ExponentError("rh_constant: requires s > 1 or infinity");
  }
  require_family_fits(w, family, "rh_constant");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.values[i] < 0.0 || !std::isfinite(w.values[i])) {
      throw ValidationError("rh_constant: weight must be finite nonnegative");
    }
  }
  const bool use_max = std::isinf(s);
  std::vector<double> powered;
  if (!use_max) {
    powered.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      powered[i] = std::pow(w.values[i], s);
    }
  }
  const PrefixSums sums(w.values);
  const SparseMinMax maxes(w.values);
  const PrefixSums pow_sums(use_max ? w.values : powered);
  // whether any cell of [i..j] is active, via prefix counts
  std::vector<double> active(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    active[i] = w.grid.cell_excluded(i) ? 0.0 : 1.0;
  }
  const PrefixSums active_sums(active);
  ConstantEstimate best = make_estimate(w, family);
  best.value = 0.0;
  family.for_each([&](std::size_t i, std::size_t j) {
    if (active_sums.range_sum(i, j) == 0.0) return;
    const double avg = sums.range_avg(i, j);
    if (avg <= 0.0) {
      throw ZeroAverageError("rh_constant: weight vanishes identically on [" +
                             std::to_string(i) + ".." + std::to_string(j) +
                             "]");
    }
    const double top = use_max ? maxes.range_max(i, j)
                               : std::pow(pow_sums.range_avg(i, j), 1.0 / s);
    const double cand = top / avg;
    if (cand > best.value) {
      best.value = cand;
      best.interval_begin = i;
      best.interval_end = j;
    }
  });
  return best;
}

ConstantEstimate ainfty_fw(const StepFunction& w,
                           const IntervalFamily& family) {
  require_family_fits(w, family, "ainfty_fw");
  require_positive_active(w, "ainfty_fw");
  const PrefixSums sums(w.values);
  ConstantEstimate best = make_estimate(w, family);
  best.value = 0.0;
  std::vector<double> slice;
  family.for_each([&](std::size_t i, std::size_t j) {
    const double mass = sums.range_sum(i, j);
    if (mass <= 0.0) return;
    slice.assign(w.values.begin() + static_cast<std::ptrdiff_t>(i),
                 w.values.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    const std::vector<double> inner = maximal_uncentered_values(slice);
    const double cand = neumaier_sum(inner) / mass;
    if (cand > best.value) {
      best.value = cand;
      best.interval_begin = i;
      best.interval_end = j;
    }
  });
  return best;
}

Lemma4Record lemma4_check(const StepFunction& u, const StepFunction& w,
                          double eps, const IntervalFamily& family) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw ExponentError("lemma4_check: requires eps in (0,1)");
  }
  require_same_grid(u.grid, w.grid, "lemma4_check");
  Lemma4Record rec;
  rec.lhs = a1_constant(multiply(u, pow_cellwise(w, eps)), family);
  const double s = 1.0 / (1.0 - eps);
  rec.rhs_bound = rh_constant(u, s, family).value * a1_constant(u, family).value *
                  std::pow(a1_constant(w, family).value, eps);
  rec.holds = rec.lhs.value <= rec.rhs_bound * (1.0 + 1e-9);
  return rec;
}

}  // namespace mixedweak
