#pragma once

#include <cstddef>
#include <string>

#include "mixedweak/errors.hpp"

namespace mixedweak {

// Uniform partition of a bounded interval of the line into half-open cells
// [left + i*dx, left + (i+1)*dx).  An optional symmetric neighborhood
// (-origin_gap, origin_gap) of the origin is excluded: cells that fall inside
// it are carried in the index range but marked excluded, and every sampled
// function is zero there.  Construction rejects grids where a cell partially
// overlaps the gap, so active cell interiors never meet (-gap, gap).
struct Grid {
  double left = 0.0;
  double dx = 1.0;
  std::size_t n_cells = 0;
  double origin_gap = 0.0;

  Grid() = default;
  Grid(double left_, double dx_, std::size_t n_cells_, double origin_gap_ = 0.0);

  double right() const { return left + static_cast<double>(n_cells) * dx; }
  double cell_left(std::size_t i) const { return left + static_cast<double>(i) * dx; }
  double cell_right(std::size_t i) const { return left + static_cast<double>(i + 1) * dx; }
  double cell_center(std::size_t i) const {
    return left + (static_cast<double>(i) + 0.5) * dx;
  }

  bool cell_excluded(std::size_t i) const {
    if (origin_gap <= 0.0) return false;
    const double c = cell_center(i);
    return c > -origin_gap && c < origin_gap;
  }

  std::size_t size() const { return n_cells; }

  bool operator==(const Grid& o) const {
    return left == o.left && dx == o.dx && n_cells == o.n_cells &&
           origin_gap == o.origin_gap;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

  // [a, b) split into n cells, no gap.
  static Grid over(double a, double b, std::size_t n);
  // [-radius, radius] with the cells inside (-gap, gap) excluded.  radius and
  // gap must be integer multiples of dx.
  static Grid symmetric(double radius, double gap, double dx);

  std::string describe() const;
};

void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace mixedweak
