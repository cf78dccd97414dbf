#include "mixedweak/grid.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace mixedweak {

namespace {

// True if x sits within tol of an integer multiple of dx measured from left.
bool on_boundary(double x, double left, double dx, double tol) {
  const double k = (x - left) / dx;
  return std::abs(k - std::round(k)) <= tol;
}

}  // namespace

Grid::Grid(double left_, double dx_, std::size_t n_cells_, double origin_gap_)
    : left(left_), dx(dx_), n_cells(n_cells_), origin_gap(origin_gap_) {
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw GridError("dx must be positive and finite, got " + std::to_string(dx));
  }
  if (n_cells == 0) {
    throw GridError("n_cells must be at least 1");
  }
  if (!std::isfinite(left)) {
    throw GridError("left must be finite");
  }
  if (origin_gap < 0.0 || !std::isfinite(origin_gap)) {
    throw GridError("origin_gap must be non-negative and finite");
  }
  if (origin_gap > 0.0) {
    // The gap endpoints must coincide with cell boundaries whenever they fall
    // strictly inside the covered range, otherwise some cell would straddle
    // the gap edge.
    const double tol = 1e-9;
    for (double edge : {-origin_gap, origin_gap}) {
      if (edge > left && edge < right() && !on_boundary(edge, left, dx, tol)) {
        throw GridError("origin_gap edge " + std::to_string(edge) +
                        " does not align with a cell boundary (dx=" +
                        std::to_string(dx) + ")");
      }
    }
  }
}

Grid Grid::over(double a, double b, std::size_t n) {
  if (!(b > a)) throw GridError("empty interval [" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return Grid(a, (b - a) / static_cast<double>(n), n, 0.0);
}

Grid Grid::symmetric(double radius, double gap, double dx) {
  if (!(radius > 0.0)) throw GridError("radius must be positive");
  const double cells = 2.0 * radius / dx;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    throw GridError("radius is not an integer multiple of dx");
  }
  return Grid(-radius, dx, static_cast<std::size_t>(rounded), gap);
}

std::string Grid::describe() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g) dx=%.17g n=%zu gap=%.17g",
                left, right(), dx, n_cells, origin_gap);
  return buf;
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (a != b) {
    throw GridMismatchError(std::string(what) + ": " + a.describe() + " vs " +
                            b.describe());
  }
}

}  // namespace mixedweak
