#pragma once

// Reference computations for the tests, written independently of the library
// internals so agreement is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mixedweak/grid.hpp"
#include "mixedweak/step_function.hpp"

namespace oracles {

// Adaptive Simpson quadrature with absolute tolerance.
inline double simpson_step(const std::function<double(double)>& f, double a,
                           double b, double fa, double fm, double fb,
                           double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Root of t * ln(e + t) = 1, the reciprocal of the Luxemburg norm of the
// constant 1 over any interval.
inline double tstar() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::log(std::exp(1.0) + mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Direct-enumeration weak norm: sup over thresholds just below each distinct
// value d of f of d * mu{f >= d}^{1/p}, with mu given by cell weights * dx.
inline double brute_weak_norm(const std::vector<double>& f,
                              const std::vector<double>& w, double dx,
                              double p) {
  double best = 0.0;
  for (double d : f) {
    if (d <= 0.0) continue;
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= d) mass += w[i] * dx;
    }
    best = std::max(best, d * std::pow(mass, 1.0 / p));
  }
  return best;
}

// Layer-cake Lorentz (p,1) norm by direct scan over sorted distinct values.
inline double brute_lorentz_p1(const std::vector<double>& f,
                               const std::vector<double>& w, double dx,
                               double p) {
  std::vector<double> levels;
  for (double d : f) {
    if (d > 0.0) levels.push_back(d);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double total = 0.0;
  double below = 0.0;
  for (double d : levels) {
    double mass = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= d) mass += w[i] * dx;
    }
    total += (d - below) * std::pow(mass, 1.0 / p);
    below = d;
  }
  return total;
}

// Uniform random step function with optional zero cells; excluded cells stay
// zero.
inline mixedweak::StepFunction random_step(const mixedweak::Grid& g,
                                           std::mt19937_64& rng,
                                           double zero_fraction = 0.2,
                                           double hi = 4.0) {
  std::uniform_real_distribution<double> val(0.0, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<double> v(g.n_cells, 0.0);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (g.cell_excluded(i)) continue;
    v[i] = coin(rng) < zero_fraction ? 0.0 : val(rng);
  }
  return {g, std::move(v)};
}

// Strictly positive random step function.
inline mixedweak::StepFunction random_positive_step(const mixedweak::Grid& g,
                                                    std::mt19937_64& rng,
                                                    double lo = 0.25,
                                                    double hi = 4.0) {
  std::uniform_real_distribution<double> val(lo, hi);
  std::vector<double> v(g.n_cells, 0.0);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (!g.cell_excluded(i)) v[i] = val(rng);
  }
  return {g, std::move(v)};
}

}  // namespace oracles
