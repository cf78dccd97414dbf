#include "mixedweak/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mixedweak/errors.hpp"
#include "mixedweak/range_stats.hpp"

namespace mixedweak {

namespace {

// ---- uncentered maximal, divide and conquer over hull tangents ----
//
// Work with points Q_m = (m, P[m]), m = 0..n.  The value at cell i is
// max slope(Q_a, Q_b) over a <= i < b.  At a split point m the spanning pairs
// (a <= m < b) decompose into two running passes, each a sequence of
// max-slope-to-a-fixed-hull queries; non-spanning pairs recurse.

struct HullPoint {
  double x, y;
};

double cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double slope(const HullPoint& a, const HullPoint& b) {
  return (b.y - a.y) / (b.x - a.x);
}

// Largest slope from q (strictly left of every hull point) to a vertex of an
// upper hull.  The slope is unimodal along the hull, so binary search on the
// improvement predicate.
double tangent_max_slope(const HullPoint& q, const std::vector<HullPoint>& hull) {
  std::size_t lo = 0, hi = hull.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (slope(q, hull[mid + 1]) > slope(q, hull[mid])) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return slope(q, hull[lo]);
}

class UncenteredSolver {
 public:
  explicit UncenteredSolver(std::span<const double> vals)
      : n_(vals.size()), p_(n_ + 1), out_(vals.begin(), vals.end()) {
    // seeding with the cell value keeps M f >= f exact; prefix differences
    // can land an ulp under it
    p_[0] = 0.0;
    for (std::size_t k = 0; k < n_; ++k) p_[k + 1] = p_[k] + vals[k];
    hull_.reserve(n_ + 1);
  }

  std::vector<double> run() {
    if (n_ > 0) rec(0, n_);
    return std::move(out_);
  }

 private:
  HullPoint point(std::size_t m) const {
    return {static_cast<double>(m), p_[m]};
  }
  HullPoint reflected(std::size_t m) const {
    return {-static_cast<double>(m), -p_[m]};
  }

  // Pairs l <= a < b <= r; cells [l, r-1].
  void rec(std::size_t l, std::size_t r) {
    if (r - l == 1) return;
    const std::size_t m = (l + r) / 2;

    // a <= i, b in [m+1, r]: upper hull of Q_{m+1}..Q_r, queries Q_l..Q_m.
    hull_.clear();
    for (std::size_t b = m + 1; b <= r; ++b) push_upper(point(b));
    double running = -std::numeric_limits<double>::infinity();
    for (std::size_t i = l; i <= m; ++i) {
      running = std::max(running, tangent_max_slope(point(i), hull_));
      out_[i] = std::max(out_[i], running);
    }

    // a in [l, m], b = i+1 with i >= m: reflect through the origin so the
    // lower hull of Q_l..Q_m becomes an upper hull queried from the left.
    hull_.clear();
    for (std::size_t a = m;; --a) {
      push_upper(reflected(a));
      if (a == l) break;
    }
    running = -std::numeric_limits<double>::infinity();
    for (std::size_t i = r - 1; i >= m; --i) {
      running = std::max(running, tangent_max_slope(reflected(i + 1), hull_));
      out_[i] = std::max(out_[i], running);
      if (i == m) break;
    }

    if (m > l) rec(l, m);
    if (r > m + 1) rec(m + 1, r);
  }

  void push_upper(const HullPoint& p) {
    while (hull_.size() >= 2 &&
           cross(hull_[hull_.size() - 2], hull_.back(), p) >= 0.0) {
      hull_.pop_back();
    }
    hull_.push_back(p);
  }

  std::size_t n_;
  std::vector<double> p_;
  std::vector<double> out_;
  std::vector<HullPoint> hull_;
};

std::vector<double> brute_uncentered(std::span<const double> vals) {
  const std::size_t n = vals.size();
  PrefixSums ps(vals);
  std::vector<double> out(vals.begin(), vals.end());
  std::vector<double> suff(n);
  for (std::size_t a = 0; a < n; ++a) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t b = n; b-- > a;) {
      m = std::max(m, ps.range_avg(a, b));
      suff[b] = m;
    }
    for (std::size_t i = a; i < n; ++i) out[i] = std::max(out[i], suff[i]);
  }
  return out;
}

std::vector<double> scan_centered(std::span<const double> vals) {
  const std::size_t n = vals.size();
  PrefixSums ps(vals);
  std::vector<double> out(vals.begin(), vals.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 1; w < n; ++w) {
      const std::size_t lo = i > w ? i - w : 0;
      const std::size_t hi = std::min(n - 1, i + w);
      const double avg =
          ps.range_sum(lo, hi) / static_cast<double>(2 * w + 1);
      out[i] = std::max(out[i], avg);
      if (lo == 0 && hi == n - 1) break;
    }
  }
  return out;
}

// Gap cells carry zeros through every operator; the maximal value there is
// meaningless and must not trip the zero-at-excluded invariant.
std::vector<double> mask_excluded(const Grid& g, std::vector<double> vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (g.cell_excluded(i)) vals[i] = 0.0;
  }
  return vals;
}

}  // namespace

std::vector<double> maximal_uncentered_values(std::span<const double> vals) {
  return UncenteredSolver(vals).run();
}

StepFunction maximal_brute(const StepFunction& f, MaximalKind kind) {
  if (kind == MaximalKind::Uncentered) {
    return StepFunction(f.grid, mask_excluded(f.grid, brute_uncentered(f.values)));
  }
  return StepFunction(f.grid, mask_excluded(f.grid, scan_centered(f.values)));
}

StepFunction maximal_fast(const StepFunction& f, MaximalKind kind) {
  if (kind == MaximalKind::Uncentered) {
    return StepFunction(f.grid,
                        mask_excluded(f.grid, maximal_uncentered_values(f.values)));
  }
  return StepFunction(f.grid, mask_excluded(f.grid, scan_centered(f.values)));
}

double luxemburg_llogl_norm(std::span<const double> cells, LLogLOptions opts) {
  const std::size_t len = cells.size();
  if (len == 0) throw ValidationError("luxemburg norm of empty interval");
  double maxv = 0.0, sum = 0.0;
  for (double c : cells) {
    maxv = std::max(maxv, c);
    sum += c;
  }
  if (maxv == 0.0) return 0.0;
  const double inv_len = 1.0 / static_cast<double>(len);
  auto phi_avg = [&](double lambda) {
    double acc = 0.0;
    for (double c : cells) {
      const double t = c / lambda;
      acc += t * std::log(std::numbers::e_v<double> + t);
    }
    return acc * inv_len;
  };
  // phi(t) >= t gives norm >= average; phi(max/l) <= 1 at l = max/0.79.
  double lo = sum * inv_len;
  double hi = maxv / 0.79;
  for (int it = 0; it < opts.max_iter && (hi - lo) > opts.rel_tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (phi_avg(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

StepFunction maximal_llogl(const StepFunction& f, const IntervalFamily& family,
                           LLogLOptions opts) {
  if (family.n_cells() != f.size()) {
    throw GridMismatchError("llogl family built for " +
                            std::to_string(family.n_cells()) + " cells, f has " +
                            std::to_string(f.size()));
  }
  std::vector<double> out(f.size(), 0.0);
  const double* v = f.values.data();
  family.for_each([&](std::size_t i, std::size_t j) {
    const double norm =
        luxemburg_llogl_norm(std::span<const double>(v + i, j - i + 1), opts);
    for (std::size_t c = i; c <= j; ++c) out[c] = std::max(out[c], norm);
  });
  return StepFunction(f.grid, mask_excluded(f.grid, std::move(out)));
}

StepFunction family_maximal(const StepFunction& f, const IntervalFamily& family) {
  return multilinear_maximal(std::span<const StepFunction>(&f, 1), family);
}

VectorMaximal maximal_vector_lq(std::span<const StepFunction> fs, double q,
                                MaximalKind kind) {
  if (fs.empty()) throw ValidationError("vector maximal: empty family");
  std::vector<StepFunction> maxima;
  maxima.reserve(fs.size());
  for (const auto& f : fs) maxima.push_back(maximal_fast(f, kind));
  VectorMaximal out{lq_combine(maxima, q),
                    maximal_fast(lq_combine(fs, q), kind)};
  return out;
}

StepFunction multilinear_maximal(std::span<const StepFunction> fs,
                                 const IntervalFamily& family) {
  if (fs.empty()) throw ValidationError("multilinear maximal: empty family");
  const std::size_t n = fs[0].size();
  for (std::size_t j = 1; j < fs.size(); ++j) {
    require_same_grid(fs[0].grid, fs[j].grid, "multilinear maximal");
  }
  if (family.n_cells() != n) {
    throw GridMismatchError("multilinear family built for " +
                            std::to_string(family.n_cells()) +
                            " cells, functions have " + std::to_string(n));
  }
  std::vector<double> out(n, 0.0);

  if (family.kind() == FamilyKind::All) {
    // For every left endpoint, suffix-maximize the product of averages so the
    // whole family costs O(n^2 m).
    std::vector<double> run(fs.size());
    std::vector<double> prod(n);
    std::vector<double> suff(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(run.begin(), run.end(), 0.0);
      for (std::size_t b = a; b < n; ++b) {
        double p = 1.0;
        const double inv_len = 1.0 / static_cast<double>(b - a + 1);
        for (std::size_t j = 0; j < fs.size(); ++j) {
          run[j] += fs[j].values[b];
          p *= run[j] * inv_len;
        }
        prod[b] = p;
      }
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t b = n; b-- > a;) {
        m = std::max(m, prod[b]);
        suff[b] = m;
      }
      for (std::size_t i = a; i < n; ++i) out[i] = std::max(out[i], suff[i]);
    }
  } else {
    std::vector<PrefixSums> ps;
    ps.reserve(fs.size());
    for (const auto& f : fs) ps.emplace_back(f.values);
    family.for_each([&](std::size_t i, std::size_t j) {
      double p = 1.0;
      for (const auto& s : ps) p *= s.range_avg(i, j);
      for (std::size_t c = i; c <= j; ++c) out[c] = std::max(out[c], p);
    });
  }
  return StepFunction(fs[0].grid, mask_excluded(fs[0].grid, std::move(out)));
}

}  // namespace mixedweak
