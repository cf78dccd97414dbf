#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mixedweak/errors.hpp"

namespace mixedweak {

enum class FamilyKind { All, Dyadic, Windowed };

// Family of grid-aligned index intervals [i, j], 0 <= i <= j < n_cells.
//   All       every interval, n(n+1)/2 members
//   Dyadic    lengths 1, 2, 4, ... at every start position
//   Windowed  every interval of length <= max_len
// Enumeration order is deterministic, so argmax ties resolve identically
// across runs.
class IntervalFamily {
 public:
  static IntervalFamily all(std::size_t n) { return {FamilyKind::All, n, 0}; }
  static IntervalFamily dyadic(std::size_t n) { return {FamilyKind::Dyadic, n, 0}; }
  static IntervalFamily windowed(std::size_t n, std::size_t max_len) {
    if (max_len == 0) throw ValidationError("windowed family: max_len must be >= 1");
    return {FamilyKind::Windowed, n, max_len};
  }

  FamilyKind kind() const { return kind_; }
  std::size_t n_cells() const { return n_; }
  std::size_t max_len() const { return max_len_; }

  std::size_t size() const {
    switch (kind_) {
      case FamilyKind::All:
        return n_ * (n_ + 1) / 2;
      case FamilyKind::Dyadic: {
        std::size_t total = 0;
        for (std::size_t len = 1; len <= n_; len *= 2) {
          total += n_ - len + 1;
          if (len > n_ / 2) break;
        }
        return total;
      }
      case FamilyKind::Windowed: {
        const std::size_t L = max_len_ < n_ ? max_len_ : n_;
        // lengths 1..L at n-len+1 positions each
        return L * n_ - L * (L - 1) / 2;
      }
    }
    return 0;
  }

  // Calls f(i, j) for every member interval.
  template <class F>
  void for_each(F&& f) const {
    switch (kind_) {
      case FamilyKind::All:
        for (std::size_t i = 0; i < n_; ++i) {
          for (std::size_t j = i; j < n_; ++j) f(i, j);
        }
        break;
      case FamilyKind::Dyadic:
        for (std::size_t len = 1; len <= n_; len *= 2) {
          for (std::size_t i = 0; i + len <= n_; ++i) f(i, i + len - 1);
          if (len > n_ / 2) break;
        }
        break;
      case FamilyKind::Windowed: {
        const std::size_t L = max_len_ < n_ ? max_len_ : n_;
        for (std::size_t i = 0; i < n_; ++i) {
          const std::size_t jmax = std::min(n_ - 1, i + L - 1);
          for (std::size_t j = i; j <= jmax; ++j) f(i, j);
        }
        break;
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> materialize() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size());
    for_each([&](std::size_t i, std::size_t j) { out.emplace_back(i, j); });
    return out;
  }

  std::string name() const {
    switch (kind_) {
      case FamilyKind::All: return "all";
      case FamilyKind::Dyadic: return "dyadic";
      case FamilyKind::Windowed: return "windowed:" + std::to_string(max_len_);
    }
    return "?";
  }

 private:
  IntervalFamily(FamilyKind k, std::size_t n, std::size_t L)
      : kind_(k), n_(n), max_len_(L) {
    if (n == 0) throw ValidationError("interval family: empty grid");
  }

  FamilyKind kind_;
  std::size_t n_;
  std::size_t max_len_;
};

IntervalFamily parse_family(const std::string& text, std::size_t n_cells);

}  // namespace mixedweak
