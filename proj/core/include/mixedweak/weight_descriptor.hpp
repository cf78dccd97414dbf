#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mixedweak/step_function.hpp"

namespace mixedweak {

class WeightDescriptor;

struct ConstantWeight {
  double value = 1.0;
};

// |x|^exponent.  Exponent <= -1 is not locally integrable at the origin, so
// sampling demands that no active cell touches x = 0.
struct PowerWeight {
  double exponent = 0.0;
};

// Distance to the nearest integer: sum over k of |x - k| on [k-1/2, k+1/2].
struct SawyerHatWeight {};

// Sum over 10 < k <= k_max of (k / ln k) on J_k = [k + 1/(4k), k + 1/k].
struct SawyerStaircaseWeight {
  long k_max = 100;
};

// Indicator of [a, b].
struct IndicatorWeight {
  double a = 0.0;
  double b = 1.0;
};

struct ProductWeight {
  std::vector<WeightDescriptor> factors;
};

// An already sampled step function, treated as zero outside its grid.
struct TableWeight {
  StepFunction table;
};

class WeightDescriptor {
 public:
  using Node = std::variant<ConstantWeight, PowerWeight, SawyerHatWeight,
                            SawyerStaircaseWeight, IndicatorWeight,
                            ProductWeight, TableWeight>;

  WeightDescriptor() : node_(ConstantWeight{1.0}) {}
  WeightDescriptor(ConstantWeight w) : node_(w) {}
  WeightDescriptor(PowerWeight w) : node_(w) {}
  WeightDescriptor(SawyerHatWeight w) : node_(w) {}
  WeightDescriptor(SawyerStaircaseWeight w) : node_(w) {}
  WeightDescriptor(IndicatorWeight w) : node_(w) {}
  WeightDescriptor(ProductWeight w) : node_(std::move(w)) {}
  WeightDescriptor(TableWeight w) : node_(std::move(w)) {}

  const Node& node() const { return node_; }

  static WeightDescriptor constant(double c) { return ConstantWeight{c}; }
  static WeightDescriptor power(double alpha) { return PowerWeight{alpha}; }
  static WeightDescriptor hat() { return SawyerHatWeight{}; }
  static WeightDescriptor staircase(long k_max) { return SawyerStaircaseWeight{k_max}; }
  static WeightDescriptor indicator(double a, double b) { return IndicatorWeight{a, b}; }
  static WeightDescriptor product(std::vector<WeightDescriptor> fs) {
    return ProductWeight{std::move(fs)};
  }
  static WeightDescriptor table(StepFunction f) { return TableWeight{std::move(f)}; }

 private:
  Node node_;
};

// Pointwise evaluation, used for midpoint fallback sampling.
double value_at(const WeightDescriptor& w, double x);

// Exact integral over [a, b] when a closed form composes, otherwise nullopt.
// Throws SingularCellError when a power factor with exponent <= -1 is
// integrated over an interval touching 0.
std::optional<double> closed_form_integral(const WeightDescriptor& w, double a,
                                           double b);

// Cell averages: exact where a closed form composes, midpoint otherwise.
// Excluded cells sample to zero.
StepFunction sample_weight(const WeightDescriptor& w, const Grid& g);

// Bounded support when one is known; nullopt means possibly unbounded.
std::optional<std::pair<double, double>> support_interval(const WeightDescriptor& w);
bool overlaps_grid(const WeightDescriptor& w, const Grid& g);

std::string to_string(const WeightDescriptor& w);

// Descriptor mini-language: "constant", "constant:2.5", "power:-0.5", "hat",
// "staircase:1000", "indicator:a,b", "spike:pos,width", "product:(d1)*(d2)".
WeightDescriptor parse_descriptor(const std::string& text);

}  // namespace mixedweak
