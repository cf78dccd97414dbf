#include "mixedweak/weight_descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mixedweak/errors.hpp"

namespace mixedweak {

namespace {

// ---- closed-form antiderivatives ----

// x >= 0 branch of the antiderivative of x^alpha.
double power_anti(double alpha, double x) {
  if (alpha == -1.0) return std::log(x);
  return std::pow(x, alpha + 1.0) / (alpha + 1.0);
}

// Integral of |x|^alpha over [a, b].
double power_integral(double alpha, double a, double b) {
  if (b <= a) return 0.0;
  const bool touches_origin = a <= 0.0 && b >= 0.0;
  if (alpha <= -1.0 && touches_origin) {
    throw SingularCellError("|x|^" + std::to_string(alpha) +
                            " integrated over [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] touching 0");
  }
  if (a >= 0.0) return power_anti(alpha, b) - power_anti(alpha, a);
  if (b <= 0.0) return power_anti(alpha, -a) - power_anti(alpha, -b);
  // straddles 0, integrable case
  return power_anti(alpha, -a) + power_anti(alpha, b);
}

double hat_piece(double s) { return 0.5 * s * std::abs(s); }

// Integral of dist-to-nearest-integer over [a, b], split at half-integers.
double hat_integral(double a, double b) {
  double total = 0.0;
  double p = a;
  while (p < b) {
    double nb = std::floor(p + 0.5) + 0.5;
    if (nb <= p) nb += 1.0;
    const double q = std::min(b, nb);
    const double k = std::round(0.5 * (p + q));
    total += hat_piece(q - k) - hat_piece(p - k);
    p = q;
  }
  return total;
}

double stair_height(long k) {
  return static_cast<double>(k) / std::log(static_cast<double>(k));
}

double stair_lo(long k) { return static_cast<double>(k) + 1.0 / (4.0 * static_cast<double>(k)); }
double stair_hi(long k) { return static_cast<double>(k) + 1.0 / static_cast<double>(k); }

// Integral of the staircase over [a, b].
double staircase_integral(long k_max, double a, double b) {
  if (b <= a) return 0.0;
  long klo = std::max<long>(11, static_cast<long>(std::floor(a)));
  long khi = std::min<long>(k_max, static_cast<long>(std::floor(b)) + 1);
  double total = 0.0;
  for (long k = klo; k <= khi; ++k) {
    const double lo = std::max(a, stair_lo(k));
    const double hi = std::min(b, stair_hi(k));
    if (hi > lo) total += stair_height(k) * (hi - lo);
  }
  return total;
}

// Integral of staircase * hat over [a, b].  On each J_k the hat equals x - k.
double staircase_hat_integral(long k_max, double a, double b) {
  if (b <= a) return 0.0;
  long klo = std::max<long>(11, static_cast<long>(std::floor(a)));
  long khi = std::min<long>(k_max, static_cast<long>(std::floor(b)) + 1);
  double total = 0.0;
  for (long k = klo; k <= khi; ++k) {
    const double lo = std::max(a, stair_lo(k));
    const double hi = std::min(b, stair_hi(k));
    if (hi > lo) {
      const double kk = static_cast<double>(k);
      total += stair_height(k) * 0.5 * ((hi - kk) * (hi - kk) - (lo - kk) * (lo - kk));
    }
  }
  return total;
}

double table_integral(const StepFunction& t, double a, double b) {
  const Grid& g = t.grid;
  const double lo = std::max(a, g.left);
  const double hi = std::min(b, g.right());
  if (hi <= lo) return 0.0;
  const auto first = static_cast<std::size_t>(
      std::max(0.0, std::floor((lo - g.left) / g.dx)));
  double total = 0.0;
  for (std::size_t i = first; i < g.n_cells; ++i) {
    const double cl = g.cell_left(i);
    if (cl >= hi) break;
    const double overlap = std::min(hi, g.cell_right(i)) - std::max(lo, cl);
    if (overlap > 0.0) total += t.values[i] * overlap;
  }
  return total;
}

// ---- product normalization ----

struct FlatProduct {
  double scalar = 1.0;
  double power_exponent = 0.0;
  bool has_power = false;
  bool has_clip = false;
  double clip_a = 0.0, clip_b = 0.0;
  // non-mergeable leaf factors
  std::vector<const WeightDescriptor::Node*> rest;
  bool empty_clip = false;
};

void flatten(const WeightDescriptor& w, FlatProduct& fp) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstantWeight>) {
          fp.scalar *= node.value;
        } else if constexpr (std::is_same_v<T, PowerWeight>) {
          fp.power_exponent += node.exponent;
          fp.has_power = true;
        } else if constexpr (std::is_same_v<T, IndicatorWeight>) {
          if (fp.has_clip) {
            fp.clip_a = std::max(fp.clip_a, node.a);
            fp.clip_b = std::min(fp.clip_b, node.b);
          } else {
            fp.has_clip = true;
            fp.clip_a = node.a;
            fp.clip_b = node.b;
          }
          if (fp.clip_a >= fp.clip_b) fp.empty_clip = true;
        } else if constexpr (std::is_same_v<T, ProductWeight>) {
          for (const auto& f : node.factors) flatten(f, fp);
        } else {
          fp.rest.push_back(&w.node());
        }
      },
      w.node());
}

bool is_hat(const WeightDescriptor::Node* n) {
  return std::holds_alternative<SawyerHatWeight>(*n);
}
bool is_stair(const WeightDescriptor::Node* n) {
  return std::holds_alternative<SawyerStaircaseWeight>(*n);
}

bool has_composed_closed_form(const WeightDescriptor& w) {
  FlatProduct fp;
  flatten(w, fp);
  if (fp.empty_clip || fp.rest.empty()) return true;
  if (fp.has_power && fp.power_exponent != 0.0) return false;
  if (fp.rest.size() == 1) return true;
  if (fp.rest.size() == 2) {
    const auto* x = fp.rest[0];
    const auto* y = fp.rest[1];
    return (is_stair(x) && is_hat(y)) || (is_hat(x) && is_stair(y));
  }
  return false;
}

}  // namespace

double value_at(const WeightDescriptor& w, double x) {
  return std::visit(
      [&](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstantWeight>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, PowerWeight>) {
          return std::pow(std::abs(x), node.exponent);
        } else if constexpr (std::is_same_v<T, SawyerHatWeight>) {
          return std::abs(x - std::round(x));
        } else if constexpr (std::is_same_v<T, SawyerStaircaseWeight>) {
          const long k = static_cast<long>(std::floor(x));
          if (k < 11 || k > node.k_max) return 0.0;
          return (x >= stair_lo(k) && x <= stair_hi(k)) ? stair_height(k) : 0.0;
        } else if constexpr (std::is_same_v<T, IndicatorWeight>) {
          return (x >= node.a && x <= node.b) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, ProductWeight>) {
          double v = 1.0;
          for (const auto& f : node.factors) v *= value_at(f, x);
          return v;
        } else {  // TableWeight
          const Grid& g = node.table.grid;
          if (x < g.left || x >= g.right()) return 0.0;
          auto i = static_cast<std::size_t>((x - g.left) / g.dx);
          if (i >= g.n_cells) i = g.n_cells - 1;
          return node.table.values[i];
        }
      },
      w.node());
}

std::optional<double> closed_form_integral(const WeightDescriptor& w, double a,
                                           double b) {
  FlatProduct fp;
  flatten(w, fp);
  if (fp.empty_clip) return 0.0;
  double lo = a, hi = b;
  if (fp.has_clip) {
    lo = std::max(lo, fp.clip_a);
    hi = std::min(hi, fp.clip_b);
    if (hi <= lo) return 0.0;
  }
  if (fp.scalar == 0.0) return 0.0;

  if (fp.rest.empty()) {
    if (!fp.has_power || fp.power_exponent == 0.0) return fp.scalar * (hi - lo);
    return fp.scalar * power_integral(fp.power_exponent, lo, hi);
  }
  if (fp.has_power && fp.power_exponent != 0.0) return std::nullopt;
  if (fp.rest.size() == 1) {
    const auto* n = fp.rest.front();
    if (is_hat(n)) return fp.scalar * hat_integral(lo, hi);
    if (is_stair(n)) {
      return fp.scalar *
             staircase_integral(std::get<SawyerStaircaseWeight>(*n).k_max, lo, hi);
    }
    return fp.scalar * table_integral(std::get<TableWeight>(*n).table, lo, hi);
  }
  if (fp.rest.size() == 2) {
    const auto* x = fp.rest[0];
    const auto* y = fp.rest[1];
    if (is_hat(x) && is_stair(y)) std::swap(x, y);
    if (is_stair(x) && is_hat(y)) {
      return fp.scalar *
             staircase_hat_integral(std::get<SawyerStaircaseWeight>(*x).k_max, lo, hi);
    }
  }
  return std::nullopt;
}

StepFunction sample_weight(const WeightDescriptor& w, const Grid& g) {
  std::vector<double> v(g.n_cells, 0.0);
  // The exact-vs-midpoint decision is per descriptor, not per cell.
  const bool exact = has_composed_closed_form(w);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    if (g.cell_excluded(i)) continue;
    const double a = g.cell_left(i);
    const double b = g.cell_right(i);
    if (exact) {
      v[i] = *closed_form_integral(w, a, b) / g.dx;
    } else {
      const double val = value_at(w, g.cell_center(i));
      if (!std::isfinite(val)) {
        throw SingularCellError("midpoint sample at x=" +
                                std::to_string(g.cell_center(i)) +
                                " is not finite for " + to_string(w));
      }
      v[i] = val;
    }
  }
  return StepFunction(g, std::move(v));
}

std::optional<std::pair<double, double>> support_interval(const WeightDescriptor& w) {
  return std::visit(
      [&](const auto& node) -> std::optional<std::pair<double, double>> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SawyerStaircaseWeight>) {
          return std::make_pair(stair_lo(11), stair_hi(node.k_max));
        } else if constexpr (std::is_same_v<T, IndicatorWeight>) {
          return std::make_pair(node.a, node.b);
        } else if constexpr (std::is_same_v<T, TableWeight>) {
          return std::make_pair(node.table.grid.left, node.table.grid.right());
        } else if constexpr (std::is_same_v<T, ProductWeight>) {
          std::optional<std::pair<double, double>> acc;
          for (const auto& f : node.factors) {
            if (auto s = support_interval(f)) {
              if (acc) {
                acc->first = std::max(acc->first, s->first);
                acc->second = std::min(acc->second, s->second);
              } else {
                acc = s;
              }
            }
          }
          return acc;
        } else {
          return std::nullopt;
        }
      },
      w.node());
}

bool overlaps_grid(const WeightDescriptor& w, const Grid& g) {
  auto s = support_interval(w);
  if (!s) return true;
  return s->second > g.left && s->first < g.right();
}

std::string to_string(const WeightDescriptor& w) {
  char buf[96];
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstantWeight>) {
          std::snprintf(buf, sizeof buf, "constant:%.12g", node.value);
          return buf;
        } else if constexpr (std::is_same_v<T, PowerWeight>) {
          std::snprintf(buf, sizeof buf, "power:%.12g", node.exponent);
          return buf;
        } else if constexpr (std::is_same_v<T, SawyerHatWeight>) {
          return "hat";
        } else if constexpr (std::is_same_v<T, SawyerStaircaseWeight>) {
          std::snprintf(buf, sizeof buf, "staircase:%ld", node.k_max);
          return buf;
        } else if constexpr (std::is_same_v<T, IndicatorWeight>) {
          std::snprintf(buf, sizeof buf, "indicator:%.12g,%.12g", node.a, node.b);
          return buf;
        } else if constexpr (std::is_same_v<T, ProductWeight>) {
          std::string out = "product:";
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            if (i) out += "*";
            out += "(" + to_string(node.factors[i]) + ")";
          }
          return out;
        } else {
          std::snprintf(buf, sizeof buf, "table[n=%zu]", node.table.size());
          return buf;
        }
      },
      w.node());
}

namespace {

std::vector<double> parse_args(const std::string& s, std::size_t want,
                               const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty()) {
      throw ValidationError("descriptor " + what + ": bad number '" + tok + "'");
    }
    out.push_back(v);
  }
  if (out.size() != want) {
    throw ValidationError("descriptor " + what + ": expected " +
                          std::to_string(want) + " arguments, got " +
                          std::to_string(out.size()));
  }
  return out;
}

// Split "(d1)*(d2)*(d3)" into top-level parenthesized chunks.
std::vector<std::string> split_product(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') {
      if (depth++ == 0) continue;
    } else if (c == ')') {
      if (--depth == 0) {
        parts.push_back(cur);
        cur.clear();
        continue;
      }
      if (depth < 0) throw ValidationError("descriptor product: unbalanced ')'");
    } else if (depth == 0) {
      if (c == '*' || c == ' ') continue;
      throw ValidationError(std::string("descriptor product: unexpected '") + c +
                            "' outside parentheses");
    }
    if (depth > 0) cur += c;
  }
  if (depth != 0) throw ValidationError("descriptor product: unbalanced '('");
  if (parts.empty()) throw ValidationError("descriptor product: empty");
  return parts;
}

}  // namespace

WeightDescriptor parse_descriptor(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "constant") {
    if (args.empty()) return WeightDescriptor::constant(1.0);
    return WeightDescriptor::constant(parse_args(args, 1, head)[0]);
  }
  if (head == "power") {
    return WeightDescriptor::power(parse_args(args, 1, head)[0]);
  }
  if (head == "hat") return WeightDescriptor::hat();
  if (head == "staircase") {
    const double k = parse_args(args, 1, head)[0];
    if (k < 11 || k != std::floor(k)) {
      throw ValidationError("descriptor staircase: k_max must be an integer >= 11");
    }
    return WeightDescriptor::staircase(static_cast<long>(k));
  }
  if (head == "indicator") {
    auto ab = parse_args(args, 2, head);
    if (!(ab[1] > ab[0])) throw ValidationError("descriptor indicator: need a < b");
    return WeightDescriptor::indicator(ab[0], ab[1]);
  }
  if (head == "spike") {
    auto pw = args.empty() ? std::vector<double>{1.0, 0.0625}
                           : parse_args(args, 2, head);
    if (!(pw[1] > 0.0)) throw ValidationError("descriptor spike: width must be positive");
    return WeightDescriptor::indicator(pw[0], pw[0] + pw[1]);
  }
  if (head == "product") {
    std::vector<WeightDescriptor> fs;
    for (const auto& part : split_product(args)) fs.push_back(parse_descriptor(part));
    return WeightDescriptor::product(std::move(fs));
  }
  throw ValidationError("unknown descriptor '" + text + "'");
}

}  // namespace mixedweak
