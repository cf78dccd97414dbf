#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mixedweak {

// Prefix sums with P[0] = 0, P[k] = x_0 + ... + x_{k-1}.
struct PrefixSums {
  std::vector<double> p;

  PrefixSums() = default;
  explicit PrefixSums(std::span<const double> xs) {
    p.resize(xs.size() + 1);
    p[0] = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) p[k + 1] = p[k] + xs[k];
  }

  // sum over cells [i, j]
  double range_sum(std::size_t i, std::size_t j) const { return p[j + 1] - p[i]; }
  double range_avg(std::size_t i, std::size_t j) const {
    return range_sum(i, j) / static_cast<double>(j - i + 1);
  }
};

// O(1) range min/max after O(n log n) setup.
class SparseMinMax {
 public:
  SparseMinMax() = default;
  explicit SparseMinMax(std::span<const double> xs) {
    n_ = xs.size();
    if (n_ == 0) return;
    levels_ = 1;
    while ((std::size_t{1} << levels_) <= n_) ++levels_;
    mins_.assign(levels_, {});
    maxs_.assign(levels_, {});
    mins_[0].assign(xs.begin(), xs.end());
    maxs_[0].assign(xs.begin(), xs.end());
    for (std::size_t l = 1; l < levels_; ++l) {
      const std::size_t half = std::size_t{1} << (l - 1);
      const std::size_t count = n_ - (std::size_t{1} << l) + 1;
      mins_[l].resize(count);
      maxs_[l].resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        mins_[l][i] = std::min(mins_[l - 1][i], mins_[l - 1][i + half]);
        maxs_[l][i] = std::max(maxs_[l - 1][i], maxs_[l - 1][i + half]);
      }
    }
  }

  double range_min(std::size_t i, std::size_t j) const {
    const std::size_t l = level_for(j - i + 1);
    return std::min(mins_[l][i], mins_[l][j + 1 - (std::size_t{1} << l)]);
  }
  double range_max(std::size_t i, std::size_t j) const {
    const std::size_t l = level_for(j - i + 1);
    return std::max(maxs_[l][i], maxs_[l][j + 1 - (std::size_t{1} << l)]);
  }

 private:
  static std::size_t level_for(std::size_t len) {
    std::size_t l = 0;
    while ((std::size_t{2} << l) <= len) ++l;
    return l;
  }

  std::size_t n_ = 0;
  std::size_t levels_ = 0;
  std::vector<std::vector<double>> mins_, maxs_;
};

}  // namespace mixedweak
