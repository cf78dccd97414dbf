#include <cmath>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/experiments.hpp"
#include "mixedweak/maximal.hpp"
#include "mixedweak/weight_descriptor.hpp"

namespace mixedweak {

namespace {

// lowest plateau index of the staircase weight
constexpr int kFirstPlateau = 11;

void require_k_max(int k_max) {
  if (k_max < 100) {
    throw ValidationError("counterexample: requires k_max >= 100");
  }
}

double checked_dx_window(int k_max, double dx_window) {
  if (dx_window <= 0.0) return 1.0 / (32.0 * static_cast<double>(k_max));
  if (dx_window > 1.0 / (16.0 * static_cast<double>(k_max))) {
    throw ResolutionError(
        "counterexample: dx " + std::to_string(dx_window) +
        " cannot resolve plateaus of width 1/(4 k_max); need dx <= 1/(16 "
        "k_max)");
  }
  return dx_window;
}

// Uncentered maximal of the unit-interval indicator at cells right of x = 1,
// on any grid whose cell boundaries include -1 and 1: the maximizing interval
// is [-1, cell right edge].
double indicator_maximal_at(double cell_right) {
  return 2.0 / (1.0 + cell_right);
}

struct BulkSide {
  double rhs_estimate;
  double m2u_max_on_unit;
};

BulkSide bulk_right_side(int k_max, double dx_bulk) {
  const double left = -2.0;
  const double right = static_cast<double>(k_max) + 1.0;
  const std::size_t n =
      static_cast<std::size_t>(std::llround((right - left) / dx_bulk));
  const Grid g(left, dx_bulk, n);
  const StepFunction u =
      sample_weight(WeightDescriptor::staircase(k_max), g);
  const StepFunction m2u = maximal_fast(maximal_fast(u));

  BulkSide out{0.0, 0.0};
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = g.cell_center(i);
    if (c < -1.0 || c > 1.0) continue;
    out.m2u_max_on_unit = std::max(out.m2u_max_on_unit, m2u.values[i]);
    const double x = m2u.values[i];
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  out.rhs_estimate = (sum + comp) * dx_bulk;
  return out;
}

}  // namespace

double sawyer_lhs_closed_form(int k_max) {
  require_k_max(k_max);
  double sum = 0.0, comp = 0.0;
  for (int k = kFirstPlateau; k <= k_max; ++k) {
    const double x = 15.0 / (32.0 * static_cast<double>(k) *
                             std::log(static_cast<double>(k)));
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

CounterexampleReport sawyer_counterexample(int k_max, double dx_window,
                                           double dx_bulk) {
  require_k_max(k_max);
  const double dx = checked_dx_window(k_max, dx_window);
  if (dx_bulk <= 0.0) dx_bulk = 1.0 / 16.0;

  CounterexampleReport rep;
  rep.k_max = k_max;
  rep.dx_window = dx;
  rep.dx_bulk = dx_bulk;
  rep.lhs_closed_form = sawyer_lhs_closed_form(k_max);
  rep.per_k_terms.reserve(static_cast<std::size_t>(k_max - kFirstPlateau + 1));

  const WeightDescriptor u_desc = WeightDescriptor::staircase(k_max);
  const WeightDescriptor v_desc = WeightDescriptor::hat();

  double sum = 0.0, comp = 0.0;
  for (int k = kFirstPlateau; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    // the integrand vanishes outside the plateau [k+1/(4k), k+1/k]; a window
    // with margin keeps every cell that meets it, on the global dx lattice
    const double lo = kk + 1.0 / (8.0 * kk);
    const double hi = kk + 2.0 / kk;
    const long long i0 = static_cast<long long>(std::floor(lo / dx));
    const long long i1 = static_cast<long long>(std::ceil(hi / dx));
    const Grid window(static_cast<double>(i0) * dx, dx,
                      static_cast<std::size_t>(i1 - i0));
    const StepFunction u = sample_weight(u_desc, window);
    const StepFunction v = sample_weight(v_desc, window);
    std::vector<double> mf(window.n_cells);
    for (std::size_t i = 0; i < window.n_cells; ++i) {
      mf[i] = indicator_maximal_at(window.cell_right(i));
    }
    const Mask mask = greater_mask(StepFunction(window, std::move(mf)), v);
    const double term = weighted_measure(mask, multiply(u, v));
    rep.per_k_terms.push_back(term);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                            : (term - t) + sum;
    sum = t;
  }
  rep.lhs_partial = sum + comp;

  const BulkSide bulk = bulk_right_side(k_max, dx_bulk);
  rep.rhs_estimate = bulk.rhs_estimate;
  rep.m2u_max_on_unit = bulk.m2u_max_on_unit;
  return rep;
}

double sawyer_lhs_dense(int k_max, double dx) {
  require_k_max(k_max);
  if (dx <= 0.0 || dx > 1.0 / (16.0 * static_cast<double>(k_max))) {
    throw ResolutionError("counterexample: dense grid needs dx <= 1/(16 k_max)");
  }
  const double left = -2.0;
  const double right = static_cast<double>(k_max) + 1.0;
  const std::size_t n =
      static_cast<std::size_t>(std::llround((right - left) / dx));
  const Grid g(left, dx, n);
  const StepFunction u = sample_weight(WeightDescriptor::staircase(k_max), g);
  const StepFunction v = sample_weight(WeightDescriptor::hat(), g);
  const StepFunction f =
      sample_weight(WeightDescriptor::indicator(-1.0, 1.0), g);
  const StepFunction mf = maximal_fast(f);
  return weighted_measure(greater_mask(mf, v), multiply(u, v));
}

}  // namespace mixedweak
