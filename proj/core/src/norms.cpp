#include "mixedweak/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/maximal.hpp"

namespace mixedweak {

namespace {

struct Layer {
  double level;
  double mass;  // mu{f >= level}
};

// Masses of the superlevel sets {f >= d} for the distinct positive values d
// of f, descending in d.  Compensated accumulation to keep the layer-cake
// sums exact at step-function scale.
std::vector<Layer> descending_layers(const StepFunction& f,
                                     const WeightedMeasure& mu) {
  require_same_grid(f.grid, mu.density.grid, "weighted norm");
  const std::size_t n = f.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f.values[a] > f.values[b];
  });
  std::vector<Layer> layers;
  double sum = 0.0, comp = 0.0;
  std::size_t k = 0;
  while (k < n && f.values[order[k]] > 0.0) {
    const double level = f.values[order[k]];
    while (k < n && f.values[order[k]] == level) {
      const double x = mu.density.values[order[k]] * f.grid.dx;
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
      ++k;
    }
    layers.push_back({level, sum + comp});
  }
  return layers;
}

void require_positive_exponent(double p, const char* what) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ExponentError(std::string(what) + ": requires p > 0");
  }
}

}  // namespace

WeakSupPoint weak_norm_argmax(const StepFunction& f, double p,
                              const WeightedMeasure& mu) {
  require_positive_exponent(p, "weak_norm");
  WeakSupPoint out;
  for (const Layer& l : descending_layers(f, mu)) {
    const double cand = l.level * std::pow(l.mass, 1.0 / p);
    if (cand > out.sup) {
      out.sup = cand;
      out.maximizing_t = l.level;
    }
    ++out.levels;
  }
  return out;
}

double weak_norm(const StepFunction& f, double p, const WeightedMeasure& mu) {
  return weak_norm_argmax(f, p, mu).sup;
}

double lorentz_p1_norm(const StepFunction& f, double p,
                       const WeightedMeasure& mu) {
  require_positive_exponent(p, "lorentz_p1_norm");
  std::vector<Layer> layers = descending_layers(f, mu);
  // ascending in level: sum (d_j - d_{j-1}) * mu{f >= d_j}^{1/p}
  double total = 0.0;
  double below = 0.0;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    total += (it->level - below) * std::pow(it->mass, 1.0 / p);
    below = it->level;
  }
  return total;
}

MixedReport evaluate_mixed_inequality(const StepFunction& f,
                                      const StepFunction& u,
                                      const StepFunction& v, MixedOperator op,
                                      RhsWeight rhs_weight) {
  require_same_grid(f.grid, u.grid, "evaluate_mixed_inequality");
  require_same_grid(f.grid, v.grid, "evaluate_mixed_inequality");

  const StepFunction numerator =
      op == MixedOperator::MOfFvOverV ? maximal_fast(multiply(f, v))
                                      : maximal_fast(f);
  const StepFunction t_fn = divide_where_positive(numerator, v);
  const WeightedMeasure uv{multiply(u, v)};
  const WeakSupPoint lhs = weak_norm_argmax(t_fn, 1.0, uv);

  double rhs = 0.0;
  switch (rhs_weight) {
    case RhsWeight::Mu:
      rhs = integrate(multiply(multiply(f, maximal_fast(u)), v));
      break;
    case RhsWeight::M2u: {
      const StepFunction m2u = maximal_fast(maximal_fast(u));
      rhs = op == MixedOperator::MOfF
                ? integrate(multiply(f, m2u))
                : integrate(multiply(multiply(f, m2u), v));
      break;
    }
    case RhsWeight::U:
      rhs = integrate(multiply(multiply(f, u), v));
      break;
  }

  MixedReport rep;
  rep.sup_t_lhs = lhs.sup;
  rep.maximizing_t = lhs.maximizing_t;
  rep.rhs = rhs;
  rep.t_grid_size = lhs.levels;
  rep.zero_rhs = rhs == 0.0;
  if (rhs > 0.0) {
    rep.ratio = lhs.sup / rhs;
  } else {
    rep.ratio = lhs.sup > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  rep.dx = f.grid.dx;
  rep.n_cells = f.grid.n_cells;
  rep.origin_gap = f.grid.origin_gap;
  return rep;
}

HolderWeakRecord holder_weak_check(std::span<const StepFunction> hs,
                                   std::span<const double> qs, double q,
                                   const WeightedMeasure& mu) {
  if (hs.empty() || hs.size() != qs.size()) {
    throw ValidationError("holder_weak_check: needs one exponent per factor");
  }
  require_positive_exponent(q, "holder_weak_check");
  double inv_sum = 0.0;
  for (double qj : qs) {
    if (!(qj >= 1.0)) {
      throw ExponentError("holder_weak_check: factor exponents must be >= 1");
    }
    inv_sum += 1.0 / qj;
  }
  if (std::abs(inv_sum - 1.0 / q) > 1e-12) {
    throw ExponentError("holder_weak_check: sum of 1/q_j must equal 1/q");
  }

  StepFunction prod = hs[0];
  for (std::size_t j = 1; j < hs.size(); ++j) prod = multiply(prod, hs[j]);

  HolderWeakRecord rec;
  rec.lhs = weak_norm(prod, q, mu);
  rec.rhs_product = 1.0;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    rec.rhs_product *= weak_norm(hs[j], qs[j], mu);
  }
  if (rec.rhs_product > 0.0) {
    rec.ratio = rec.lhs / rec.rhs_product;
  } else {
    rec.ratio = rec.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return rec;
}

}  // namespace mixedweak
