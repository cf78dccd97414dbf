#include "mixedweak/rubio.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "mixedweak/errors.hpp"
#include "mixedweak/maximal.hpp"

namespace mixedweak {

namespace {

constexpr double kDecayThreshold = 0.9;

}  // namespace

RubioMachine::RubioMachine(RubioConfig cfg) : cfg_(std::move(cfg)) {
  require_same_grid(cfg_.u.grid, cfg_.v1.grid, "rubio config");
  if (!(cfg_.lambda > 1.0)) {
    throw ValidationError("rubio config: requires lambda > 1");
  }
  if (!(cfg_.delta > 0.0)) {
    throw ValidationError("rubio config: requires delta > 0");
  }
  if (cfg_.j_max < 0) {
    throw ValidationError("rubio config: requires j_max >= 0");
  }
  q_ = cfg_.q == 0.0 ? 4.0 * cfg_.lambda : cfg_.q;
  if (!(q_ >= 1.0)) {
    throw ExponentError("rubio config: certification exponent must be >= 1");
  }
  weight_ = multiply(cfg_.u, pow_cellwise(cfg_.v1, 1.0 / (cfg_.lambda * cfg_.delta)));
  uv_ = multiply(cfg_.u, pow_cellwise(cfg_.v1, 1.0 / cfg_.delta));
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    if (!weight_.grid.cell_excluded(i) && weight_.values[i] <= 0.0) {
      throw ZeroWeightError("rubio config: denominator weight vanishes on an "
                            "active cell");
    }
  }
}

StepFunction RubioMachine::s_lambda(const StepFunction& f) const {
  require_same_grid(f.grid, weight_.grid, "s_lambda");
  return divide_where_positive(maximal_fast(multiply(f, weight_)), weight_);
}

double RubioMachine::cert_norm(const StepFunction& f) const {
  return lorentz_p1_norm(f, q_, WeightedMeasure{uv_});
}

double RubioMachine::estimate_norm_bound(int probes, std::uint64_t seed) const {
  if (probes < 16) {
    throw ValidationError("estimate_norm_bound: requires probes >= 16");
  }
  const Grid& g = weight_.grid;
  const std::size_t n = g.n_cells;
  std::vector<StepFunction> battery;

  auto push = [&](std::vector<double> v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.cell_excluded(i)) v[i] = 0.0;
    }
    battery.emplace_back(g, std::move(v));
  };

  push(std::vector<double>(n, 1.0));
  for (std::size_t pos : {n / 4, n / 2, (3 * n) / 4}) {
    std::vector<double> v(n, 0.0);
    v[std::min(pos, n - 1)] = 1.0;
    push(std::move(v));
  }
  for (double alpha : {-0.5, 0.25}) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = std::pow(std::abs(g.cell_center(i)) + g.dx, alpha);
    }
    push(std::move(v));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> cell(0, n - 1);
  std::uniform_int_distribution<int> level(1, 3);
  while (battery.size() < static_cast<std::size_t>(probes)) {
    std::size_t a = cell(rng), b = cell(rng);
    if (a > b) std::swap(a, b);
    const double hi = std::pow(2.0, level(rng));
    std::vector<double> v(n, 1.0);
    for (std::size_t i = a; i <= b; ++i) v[i] = hi;
    push(std::move(v));
  }

  double worst = 0.0;
  std::size_t used = 0;
  for (const StepFunction& f : battery) {
    const double denom = cert_norm(f);
    if (denom == 0.0) continue;  // degenerate probe, skipped
    worst = std::max(worst, cert_norm(s_lambda(f)) / denom);
    ++used;
  }
  if (used == 0) {
    throw NumericError("estimate_norm_bound: every probe had zero norm");
  }
  return 2.0 * worst;
}

RubioIteration RubioMachine::iterate(const StepFunction& h) const {
  require_same_grid(h.grid, weight_.grid, "rubio_iterate");
  if (!(cfg_.k0 > 0.0)) {
    throw ValidationError("rubio config: requires k0 > 0 before iterating");
  }
  const double inv = 1.0 / (2.0 * cfg_.k0);

  RubioIteration out;
  out.term_norms.reserve(static_cast<std::size_t>(cfg_.j_max) + 2);
  StepFunction term = h;
  StepFunction partial = h;
  out.term_norms.push_back(cert_norm(term));
  for (int j = 1; j <= cfg_.j_max + 1; ++j) {
    term = scale(s_lambda(term), inv);
    out.term_norms.push_back(cert_norm(term));
    partial = add(partial, term);
    if (j == cfg_.j_max) out.r_j = partial;
  }
  if (cfg_.j_max == 0) out.r_j = h;
  out.r_j1 = std::move(partial);

  // certify geometric decay of the last up-to-3 term-norm ratios
  const std::size_t m = out.term_norms.size();
  const std::size_t first = m >= 4 ? m - 4 : 0;
  for (std::size_t j = first; j + 1 < m; ++j) {
    const double lo = out.term_norms[j], hi = out.term_norms[j + 1];
    if (lo == 0.0) {
      if (hi != 0.0) {
        throw NumericError("rubio_iterate: zero term followed by nonzero term");
      }
      continue;
    }
    const double rho = hi / lo;
    out.decay_rho = std::max(out.decay_rho, rho);
    if (!(rho <= kDecayThreshold)) {
      throw DivergenceError(
          "rubio_iterate: term norms decay with ratio " + std::to_string(rho) +
          " > " + std::to_string(kDecayThreshold) + "; k0 too small");
    }
  }
  return out;
}

RubioVerification RubioMachine::verify(const StepFunction& h) const {
  RubioVerification out;
  out.iteration = iterate(h);

  out.prop_a = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (out.iteration.r_j.values[i] < h.values[i]) {
      out.prop_a = false;
      break;
    }
  }

  const double h_norm = cert_norm(h);
  out.prop_b_ratio = h_norm > 0.0 ? cert_norm(out.iteration.r_j) / h_norm : 0.0;

  const StepFunction lhs = s_lambda(out.iteration.r_j);
  out.prop_c = true;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double bound = 2.0 * cfg_.k0 * out.iteration.r_j1.values[i];
    if (lhs.values[i] > bound * (1.0 + 1e-9)) out.prop_c = false;
    if (bound > 0.0) {
      out.prop_c_max_defect =
          std::max(out.prop_c_max_defect, lhs.values[i] / bound - 1.0);
    } else if (lhs.values[i] > 0.0) {
      out.prop_c = false;
    }
  }
  return out;
}

StepFunction s_lambda_op(const StepFunction& f, const RubioConfig& cfg) {
  return RubioMachine(cfg).s_lambda(f);
}

double estimate_norm_bound(const RubioConfig& cfg, int probes,
                           std::uint64_t seed) {
  return RubioMachine(cfg).estimate_norm_bound(probes, seed);
}

RubioIteration rubio_iterate(const StepFunction& h, const RubioConfig& cfg) {
  return RubioMachine(cfg).iterate(h);
}

RubioVerification rubio_verify(const StepFunction& h, const RubioConfig& cfg) {
  return RubioMachine(cfg).verify(h);
}

}  // namespace mixedweak
