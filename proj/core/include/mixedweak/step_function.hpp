#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mixedweak/grid.hpp"

namespace mixedweak {

using Mask = std::vector<std::uint8_t>;

// Non-negative piecewise constant function on a Grid, one value per cell.
// Values on excluded cells must be zero.
struct StepFunction {
  Grid grid;
  std::vector<double> values;

  StepFunction() = default;
  StepFunction(Grid g, std::vector<double> v);

  static StepFunction zeros(const Grid& g) {
    return StepFunction(g, std::vector<double>(g.n_cells, 0.0));
  }
  static StepFunction constant(const Grid& g, double c);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

// Compensated (Neumaier) sum of a range.
double neumaier_sum(std::span<const double> xs);

// Integral over the covered range: sum of values[i] * dx.
double integrate(const StepFunction& f);

// Integral of w over the cells selected by mask.
double weighted_measure(const Mask& mask, const StepFunction& w);

Mask superlevel_mask(const StepFunction& f, double t);  // cells with f > t
Mask greater_mask(const StepFunction& a, const StepFunction& b);  // a > b
Mask complement(const Mask& m);

// Cellwise arithmetic.  All operands must share one grid.
StepFunction multiply(const StepFunction& a, const StepFunction& b);
StepFunction add(const StepFunction& a, const StepFunction& b);
StepFunction scale(const StepFunction& a, double c);
StepFunction pow_cellwise(const StepFunction& a, double e);
// a/b where b > 0, zero where b == 0.
StepFunction divide_where_positive(const StepFunction& a, const StepFunction& b);
// (sum_j f_j^q)^{1/q}
StepFunction lq_combine(std::span<const StepFunction> fs, double q);

double max_value(const StepFunction& f);

}  // namespace mixedweak
