#include "mixedweak/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string_view>
#include <vector>

#include "mixedweak/errors.hpp"
#include "mixedweak/maximal.hpp"
#include "mixedweak/weight_descriptor.hpp"

namespace mixedweak {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// f-mass of {|y| <= rho}, boundary cells prorated by overlap length
double mass_within(const StepFunction& f, double rho) {
  if (rho <= 0.0) return 0.0;
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.values[i] == 0.0) continue;
    const double lo = std::max(f.grid.cell_left(i), -rho);
    const double hi = std::min(f.grid.cell_right(i), rho);
    if (hi <= lo) continue;
    const double x = f.values[i] * (hi - lo);
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

StepFunction masked(const StepFunction& f, const Mask& m) {
  std::vector<double> v(f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (m[i]) v[i] = f.values[i];
  }
  return StepFunction(f.grid, std::move(v));
}

double parse_number(std::string_view text, const char* what) {
  double out = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ValidationError(std::string(what) + ": bad number '" +
                          std::string(text) + "'");
  }
  return out;
}

std::vector<double> parse_numbers(std::string_view text, std::size_t count,
                                  const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_number(text.substr(start, end - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw ValidationError(std::string(what) + ": expected " +
                          std::to_string(count) + " arguments");
  }
  return out;
}

}  // namespace

double lemma_local_solve(const StepFunction& f, double r, double lambda) {
  if (!(r > 1.0)) throw ExponentError("lemma_local_solve: requires r > 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("lemma_local_solve: requires lambda > 0");
  }
  if (integrate(f) <= 0.0) {
    throw ZeroMassError("lemma_local_solve: f has zero mass, no root");
  }
  const auto g = [&](double a) {
    return mass_within(f, std::pow(a, 1.0 / (r - 1.0))) * a;
  };
  const double tol = 1e-8 * lambda;

  double lo = 1.0, hi = 1.0;
  if (g(1.0) < lambda) {
    for (int i = 0; g(hi) < lambda; ++i) {
      if (i >= 200) {
        throw NumericError("lemma_local_solve: no bracket above");
      }
      lo = hi;
      hi *= 2.0;
    }
  } else {
    for (int i = 0; g(lo) > lambda; ++i) {
      if (i >= 200) {
        throw NumericError("lemma_local_solve: no bracket below");
      }
      hi = lo;
      lo /= 2.0;
    }
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 500; ++i) {
    mid = 0.5 * (lo + hi);
    const double val = g(mid);
    if (std::abs(val - lambda) <= tol) return mid;
    (val < lambda ? lo : hi) = mid;
  }
  throw NumericError("lemma_local_solve: bisection failed to converge");
}

std::vector<AnnuliRecord> annuli_check(const StepFunction& f,
                                       const StepFunction& v, int k_lo,
                                       int k_hi) {
  require_same_grid(f.grid, v.grid, "annuli_check");
  if (k_lo > k_hi) throw ValidationError("annuli_check: empty k range");
  const StepFunction g = multiply(f, v);
  const StepFunction mg = maximal_fast(g);
  const Grid& grid = g.grid;
  const std::size_t n = grid.n_cells;

  // cells sorted by |center| for suffix sums of g/|y| and prefix masses of g
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(grid.cell_center(a)) < std::abs(grid.cell_center(b));
  });
  std::vector<double> tail(n + 1, 0.0);   // sum of g/|y| dx over ranks >= t
  std::vector<double> inner(n + 1, 0.0);  // sum of g dx over ranks < t
  for (std::size_t t = n; t-- > 0;) {
    const std::size_t c = order[t];
    const double contrib =
        g.values[c] == 0.0
            ? 0.0
            : g.values[c] / std::abs(grid.cell_center(c)) * grid.dx;
    tail[t] = tail[t + 1] + contrib;
  }
  for (std::size_t t = 0; t < n; ++t) {
    inner[t + 1] = inner[t] + g.values[order[t]] * grid.dx;
  }
  std::vector<double> abs_sorted(n);
  for (std::size_t t = 0; t < n; ++t) {
    abs_sorted[t] = std::abs(grid.cell_center(order[t]));
  }

  std::vector<AnnuliRecord> records;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double lo2 = std::ldexp(1.0, k);       // 2^k
    const double hi2 = std::ldexp(1.0, k + 1);   // 2^{k+1}
    const double in2 = std::ldexp(1.0, k - 1);   // 2^{k-1}
    const double out2 = std::ldexp(1.0, k + 2);  // 2^{k+2}

    Mask gk(n, 0), ik(n, 0), lk(n, 0), ck(n, 0);
    std::size_t gk_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(grid.cell_center(i));
      if (a > lo2 && a <= hi2) {
        gk[i] = 1;
        ++gk_count;
      }
      if (a > in2 && a <= out2) ik[i] = 1;
      if (a > out2) lk[i] = 1;
      if (a <= in2) ck[i] = 1;
    }
    if (gk_count == 0) continue;

    const StepFunction mi = maximal_fast(masked(g, ik));
    const StepFunction ml = maximal_fast(masked(g, lk));
    const StepFunction mc = maximal_fast(masked(g, ck));

    AnnuliRecord rec;
    rec.k = k;
    rec.cells_in_gk = gk_count;
    for (std::size_t i = 0; i < n; ++i) {
      if (!gk[i]) continue;
      const double split = mi.values[i] + ml.values[i] + mc.values[i];
      if (mg.values[i] > 0.0) {
        rec.max_sublinearity_defect =
            std::max(rec.max_sublinearity_defect,
                     (mg.values[i] - split) / mg.values[i]);
      }
      const double ax = std::abs(grid.cell_center(i));
      // F(x): tail sum over cells with |y| > |x|
      const std::size_t rank = static_cast<std::size_t>(
          std::upper_bound(abs_sorted.begin(), abs_sorted.end(), ax) -
          abs_sorted.begin());
      const double majorant = tail[rank];
      if (majorant > 0.0) {
        rec.c_far = std::max(rec.c_far, ml.values[i] / majorant);
      } else if (ml.values[i] > 0.0) {
        rec.c_far = kInf;
      }
      // inner mass over cells with |y| <= |x|/2
      const std::size_t half_rank = static_cast<std::size_t>(
          std::upper_bound(abs_sorted.begin(), abs_sorted.end(), ax / 2.0) -
          abs_sorted.begin());
      const double inner_mass = inner[half_rank];
      if (inner_mass > 0.0) {
        rec.c_near = std::max(rec.c_near, mc.values[i] * ax / inner_mass);
      } else if (mc.values[i] > 0.0) {
        rec.c_near = kInf;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

RatioBounds m2_llogl_compare(std::span<const StepFunction> fs,
                             const IntervalFamily& family) {
  if (fs.empty()) throw ValidationError("m2_llogl_compare: no functions");
  RatioBounds out;
  out.c_lo = kInf;
  for (const StepFunction& f : fs) {
    const StepFunction m2 = maximal_fast(maximal_fast(f));
    const StepFunction ll = maximal_llogl(f, family);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (ll.values[i] <= 0.0) continue;
      const double ratio = m2.values[i] / ll.values[i];
      out.c_lo = std::min(out.c_lo, ratio);
      out.c_hi = std::max(out.c_hi, ratio);
      ++out.cells_counted;
    }
  }
  if (out.cells_counted == 0) {
    throw ZeroMassError("m2_llogl_compare: denominator vanished everywhere");
  }
  return out;
}

MixedReport vector_valued_check(std::span<const StepFunction> fs, double q,
                                const StepFunction& u, const StepFunction& v) {
  if (fs.empty()) throw ValidationError("vector_valued_check: no functions");
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw ExponentError("vector_valued_check: requires 1 < q < infinity");
  }
  require_same_grid(u.grid, v.grid, "vector_valued_check");
  std::vector<StepFunction> maximals;
  maximals.reserve(fs.size());
  for (const StepFunction& f : fs) {
    require_same_grid(f.grid, v.grid, "vector_valued_check");
    maximals.push_back(maximal_fast(multiply(f, v)));
  }
  const StepFunction t_fn =
      divide_where_positive(lq_combine(maximals, q), v);
  const WeightedMeasure uv{multiply(u, v)};
  const WeakSupPoint lhs = weak_norm_argmax(t_fn, 1.0, uv);
  const double rhs = integrate(multiply(multiply(lq_combine(fs, q), u), v));

  MixedReport rep;
  rep.sup_t_lhs = lhs.sup;
  rep.maximizing_t = lhs.maximizing_t;
  rep.rhs = rhs;
  rep.t_grid_size = lhs.levels;
  rep.zero_rhs = rhs == 0.0;
  if (rhs > 0.0) {
    rep.ratio = lhs.sup / rhs;
  } else {
    rep.ratio = lhs.sup > 0.0 ? kInf : 0.0;
  }
  rep.dx = v.grid.dx;
  rep.n_cells = v.grid.n_cells;
  rep.origin_gap = v.grid.origin_gap;
  return rep;
}

MultilinearRecord multilinear_check(const StepFunction& f1,
                                    const StepFunction& f2,
                                    const StepFunction& u,
                                    const StepFunction& v,
                                    const IntervalFamily& family) {
  require_same_grid(f1.grid, f2.grid, "multilinear_check");
  require_same_grid(f1.grid, u.grid, "multilinear_check");
  require_same_grid(f1.grid, v.grid, "multilinear_check");
  const std::array<StepFunction, 2> fs{f1, f2};
  const StepFunction bi = multilinear_maximal(fs, family);
  const StepFunction m1 = family_maximal(f1, family);
  const StepFunction m2 = family_maximal(f2, family);

  MultilinearRecord rec;
  rec.pointwise_holds = true;
  for (std::size_t i = 0; i < bi.size(); ++i) {
    const double bound = m1.values[i] * m2.values[i];
    if (bi.values[i] > bound) rec.pointwise_holds = false;
    if (bound > 0.0) {
      rec.max_pointwise_defect =
          std::max(rec.max_pointwise_defect, bi.values[i] / bound - 1.0);
    }
  }

  const WeightedMeasure uv{multiply(u, v)};
  rec.lhs = weak_norm(divide_where_positive(bi, multiply(v, v)), 0.5, uv);
  rec.rhs_chain = weak_norm(divide_where_positive(m1, v), 1.0, uv) *
                  weak_norm(divide_where_positive(m2, v), 1.0, uv);
  rec.rhs_final = integrate(multiply(f1, u)) * integrate(multiply(f2, u));
  rec.ratio_chain = rec.rhs_chain > 0.0
                        ? rec.lhs / rec.rhs_chain
                        : (rec.lhs > 0.0 ? kInf : 0.0);
  rec.ratio_final = rec.rhs_final > 0.0
                        ? rec.lhs / rec.rhs_final
                        : (rec.lhs > 0.0 ? kInf : 0.0);
  return rec;
}

StepFunction build_profile(const std::string& spec, const Grid& g) {
  if (spec.rfind("twovalued:", 0) == 0) {
    const std::vector<double> a =
        parse_numbers(std::string_view(spec).substr(10), 4, "twovalued");
    const double lo = a[0], hi = a[1];
    if (!(lo >= 0.0) || !(hi >= lo)) {
      throw ValidationError("twovalued: requires 0 <= lo <= hi");
    }
    if (!(a[2] < a[3])) {
      throw ValidationError("twovalued: requires a < b");
    }
    const StepFunction block =
        sample_weight(WeightDescriptor::indicator(a[2], a[3]), g);
    return add(StepFunction::constant(g, lo), scale(block, hi - lo));
  }
  return sample_weight(parse_descriptor(spec), g);
}

}  // namespace mixedweak
