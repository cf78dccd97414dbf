#include "mixedweak/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "mixedweak/errors.hpp"

namespace mixedweak {

StepFunction::StepFunction(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.n_cells) {
    throw ValidationError("step function: " + std::to_string(values.size()) +
                          " values for " + std::to_string(grid.n_cells) +
                          " cells");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw ValidationError("step function: value at cell " +
                            std::to_string(i) + " is " +
                            std::to_string(values[i]));
    }
    if (values[i] != 0.0 && grid.cell_excluded(i)) {
      throw ValidationError("step function: nonzero value at excluded cell " +
                            std::to_string(i));
    }
  }
}

StepFunction StepFunction::constant(const Grid& g, double c) {
  std::vector<double> v(g.n_cells, c);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (g.cell_excluded(i)) v[i] = 0.0;
  }
  return StepFunction(g, std::move(v));
}

double neumaier_sum(std::span<const double> xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double integrate(const StepFunction& f) {
  return neumaier_sum(f.values) * f.grid.dx;
}

double weighted_measure(const Mask& mask, const StepFunction& w) {
  if (mask.size() != w.size()) {
    throw ValidationError("weighted_measure: mask size " +
                          std::to_string(mask.size()) + " vs " +
                          std::to_string(w.size()) + " cells");
  }
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    const double x = w.values[i];
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return (sum + comp) * w.grid.dx;
}

Mask superlevel_mask(const StepFunction& f, double t) {
  Mask m(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) m[i] = f.values[i] > t ? 1 : 0;
  return m;
}

Mask greater_mask(const StepFunction& a, const StepFunction& b) {
  require_same_grid(a.grid, b.grid, "greater_mask");
  Mask m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i] = a.values[i] > b.values[i] ? 1 : 0;
  }
  return m;
}

Mask complement(const Mask& m) {
  Mask out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] ? 0 : 1;
  return out;
}

namespace {
template <class Op>
StepFunction zip(const StepFunction& a, const StepFunction& b, Op op,
                 const char* what) {
  require_same_grid(a.grid, b.grid, what);
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = op(a.values[i], b.values[i]);
  return StepFunction(a.grid, std::move(v));
}
}  // namespace

StepFunction multiply(const StepFunction& a, const StepFunction& b) {
  return zip(a, b, [](double x, double y) { return x * y; }, "multiply");
}

StepFunction add(const StepFunction& a, const StepFunction& b) {
  return zip(a, b, [](double x, double y) { return x + y; }, "add");
}

StepFunction scale(const StepFunction& a, double c) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.values[i] * c;
  return StepFunction(a.grid, std::move(v));
}

StepFunction pow_cellwise(const StepFunction& a, double e) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = a.values[i] == 0.0 ? 0.0 : std::pow(a.values[i], e);
  }
  return StepFunction(a.grid, std::move(v));
}

StepFunction divide_where_positive(const StepFunction& a, const StepFunction& b) {
  return zip(a, b, [](double x, double y) { return y > 0.0 ? x / y : 0.0; },
             "divide");
}

StepFunction lq_combine(std::span<const StepFunction> fs, double q) {
  if (fs.empty()) throw ValidationError("lq_combine: empty family");
  if (!(q >= 1.0)) throw ExponentError("lq_combine requires q >= 1, got " + std::to_string(q));
  for (std::size_t j = 1; j < fs.size(); ++j) {
    require_same_grid(fs[0].grid, fs[j].grid, "lq_combine");
  }
  std::vector<double> v(fs[0].size(), 0.0);
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] += std::pow(f.values[i], q);
    }
  }
  for (double& x : v) x = std::pow(x, 1.0 / q);
  return StepFunction(fs[0].grid, std::move(v));
}

double max_value(const StepFunction& f) {
  return *std::max_element(f.values.begin(), f.values.end());
}

}  // namespace mixedweak
