// mwlab: command-line front end for the mixed weak-type inequality laboratory.
// Every command reads an optional JSON config plus flag overrides, runs one
// experiment, writes JSON/CSV/plot-data into the output directory, and prints
// a one-line summary.  Identical (config, seed) runs produce identical bytes.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedweak/errors.hpp"
#include "mixedweak/experiments.hpp"
#include "mixedweak/io.hpp"
#include "mixedweak/maximal.hpp"
#include "mixedweak/norms.hpp"
#include "mixedweak/rubio.hpp"
#include "mixedweak/weight_constants.hpp"
#include "mixedweak/weight_descriptor.hpp"

namespace {

using Json = nlohmann::json;
using namespace mixedweak;

constexpr const char* kToolVersion = "0.1.0";

[[noreturn]] void bad_config(const std::string& msg) {
  throw ValidationError("config: " + msg);
}

void check_keys(const Json& cfg, const std::set<std::string>& allowed,
                const std::string& scope) {
  if (!cfg.is_object()) bad_config(scope + " must be a JSON object");
  for (const auto& item : cfg.items()) {
    if (!allowed.contains(item.key())) {
      bad_config("unknown key '" + scope + item.key() + "'");
    }
  }
}

double num_at(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (!v.is_number()) bad_config("'" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t int_at(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (!v.is_number_integer()) bad_config("'" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string str_at(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (!v.is_string()) bad_config("'" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> num_list_at(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (!v.is_array() || v.empty()) bad_config("'" + key + "' must be a nonempty array");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) bad_config("'" + key + "' entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::string> str_list_at(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (!v.is_array() || v.empty()) bad_config("'" + key + "' must be a nonempty array");
  std::vector<std::string> out;
  for (const Json& x : v) {
    if (!x.is_string()) bad_config("'" + key + "' entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Grid grid_from(const Json& cfg) {
  check_keys(cfg, {"left", "dx", "n_cells", "origin_gap", "radius", "gap"},
             "grid.");
  const bool symmetric = cfg.contains("radius");
  if (symmetric && cfg.contains("left")) {
    bad_config("grid: give either radius/gap or left/n_cells, not both");
  }
  if (!cfg.contains("dx")) bad_config("grid: missing 'dx'");
  const double dx = num_at(cfg, "dx");
  if (symmetric) {
    const double gap = cfg.contains("gap") ? num_at(cfg, "gap") : 0.0;
    return Grid::symmetric(num_at(cfg, "radius"), gap, dx);
  }
  if (!cfg.contains("left") || !cfg.contains("n_cells")) {
    bad_config("grid: missing 'left' or 'n_cells'");
  }
  const std::int64_t n = int_at(cfg, "n_cells");
  if (n < 1) bad_config("grid: 'n_cells' must be >= 1");
  const double gap =
      cfg.contains("origin_gap") ? num_at(cfg, "origin_gap") : 0.0;
  return Grid(num_at(cfg, "left"), dx, static_cast<std::size_t>(n), gap);
}

double exponent_from(const Json& cfg, const std::string& key) {
  const Json& v = cfg.at(key);
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    bad_config("'" + key + "' must be a number or \"inf\"");
  }
  if (!v.is_number()) bad_config("'" + key + "' must be a number or \"inf\"");
  return v.get<double>();
}

// ------------------------------------------------------------------ config

Json default_config(const std::string& cmd) {
  if (cmd == "maximal") {
    return Json{{"grid", {{"radius", 8.0}, {"gap", 0.0}, {"dx", 1.0 / 256.0}}},
                {"f", "indicator:-1,1"},
                {"op", "fast"},
                {"kind", "uncentered"},
                {"family", "dyadic"},
                {"seed", 0}};
  }
  if (cmd == "weights") {
    return Json{{"grid", {{"left", 0.0}, {"dx", 1.0}, {"n_cells", 2}}},
                {"which", "a1"},
                {"w", "twovalued:1,2,1,2"},
                {"u", "constant:1"},
                {"family", "all"},
                {"p", 2.0},
                {"s", "inf"},
                {"eps", 0.5},
                {"seed", 0}};
  }
  if (cmd == "norms") {
    return Json{{"grid", {{"left", -8.0}, {"dx", 1.0 / 64.0}, {"n_cells", 1024}}},
                {"which", "mixed"},
                {"f", "indicator:0,1"},
                {"u", "constant:1"},
                {"v", "constant:1"},
                {"operator", "m_fv_over_v"},
                {"rhs_weight", "mu"},
                {"p", 1.0},
                {"measure", "constant:1"},
                {"f_specs", Json::array({"indicator:0,2", "indicator:1,3"})},
                {"qs", Json::array({2.0, 2.0})},
                {"q", 1.0},
                {"seed", 0}};
  }
  if (cmd == "rubio") {
    return Json{{"grid", {{"left", -4.0}, {"dx", 1.0 / 64.0}, {"n_cells", 512}}},
                {"u", "constant:1"},
                {"v1", "constant:1"},
                {"h", "twovalued:1,4,0,1"},
                {"lambda", 2.0},
                {"delta", 0.5},
                {"j_max", 30},
                {"q", 0.0},
                {"k0", 0.0},
                {"probes", 32},
                {"seed", 0}};
  }
  if (cmd == "counterexample") {
    return Json{{"k_max", 1000},
                {"dx_window", 0.0},
                {"dx_bulk", 0.0},
                {"seed", 0}};
  }
  if (cmd == "sweep") {
    return Json{{"r_values", Json::array({2.0})},
                {"radius_values", Json::array({32.0, 64.0, 128.0, 256.0})},
                {"gap_values",
                 Json::array({1.0 / 256.0, 1.0 / 512.0, 1.0 / 1024.0,
                              1.0 / 2048.0})},
                {"dx_values",
                 Json::array({1.0 / 256.0, 1.0 / 512.0, 1.0 / 1024.0,
                              1.0 / 2048.0})},
                {"u_specs", Json::array({"constant:1"})},
                {"f_specs", Json::array({"indicator:1,2"})},
                {"seed", 0}};
  }
  if (cmd == "annuli") {
    return Json{{"grid", {{"radius", 32.0}, {"gap", 1.0 / 64.0}, {"dx", 1.0 / 64.0}}},
                {"f", "indicator:8,16"},
                {"v", "power:-2"},
                {"k_lo", 0},
                {"k_hi", 3},
                {"seed", 0}};
  }
  if (cmd == "compare-llogl") {
    return Json{{"grid", {{"left", -4.0}, {"dx", 1.0 / 64.0}, {"n_cells", 512}}},
                {"f_specs", Json::array({"constant:1", "spike"})},
                {"family", "dyadic"},
                {"seed", 0}};
  }
  if (cmd == "vector") {
    return Json{{"grid", {{"radius", 16.0}, {"gap", 1.0 / 256.0}, {"dx", 1.0 / 256.0}}},
                {"f_specs", Json::array({"indicator:1,2", "indicator:2,3"})},
                {"q", 2.0},
                {"u", "constant:1"},
                {"v", "power:-2"},
                {"seed", 0}};
  }
  if (cmd == "multilinear") {
    return Json{{"grid", {{"radius", 16.0}, {"gap", 1.0 / 256.0}, {"dx", 1.0 / 256.0}}},
                {"f1", "indicator:1,2"},
                {"f2", "indicator:1,2"},
                {"u", "constant:1"},
                {"v", "power:-2"},
                {"family", "all"},
                {"seed", 0}};
  }
  bad_config("unknown command '" + cmd + "'");
}

void check_against_defaults(const Json& cfg, const Json& defaults,
                            const std::string& scope) {
  std::set<std::string> allowed;
  for (const auto& item : defaults.items()) allowed.insert(item.key());
  if (scope.empty() && defaults.contains("grid")) {
    // grid objects take either the radius or the left/n_cells form
    check_keys(cfg, allowed, scope);
    return;
  }
  check_keys(cfg, allowed, scope);
}

void merge_into(Json& base, const Json& overlay, const std::string& scope) {
  if (!overlay.is_object()) bad_config(scope + "config must be a JSON object");
  for (const auto& item : overlay.items()) {
    if (item.key() == "grid" && base.contains("grid") &&
        item.value().is_object()) {
      // grids replace wholesale: the two addressing forms must not mix
      base["grid"] = item.value();
    } else {
      base[item.key()] = item.value();
    }
  }
}

void apply_override(Json& cfg, const std::string& spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    bad_config("override '" + spec + "' is not key=value");
  }
  const std::string path = spec.substr(0, eq);
  const std::string raw = spec.substr(eq + 1);
  Json value = Json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  Json* node = &cfg;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key =
        path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (key.empty()) bad_config("override '" + spec + "' has an empty key");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      break;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

// ------------------------------------------------------------------ output

struct Emitter {
  std::filesystem::path dir;
  std::vector<std::string> written;

  void write(const std::string& name, std::string_view content) {
    const std::filesystem::path p = dir / name;
    write_text_file(p.string(), content);
    written.push_back(p.string());
  }

  std::string paths() const {
    std::string out;
    for (const std::string& p : written) {
      if (!out.empty()) out += ' ';
      out += p;
    }
    return out;
  }
};

Json provenance(const std::string& cmd, const Json& cfg) {
  const Json canonical{{"command", cmd}, {"config", cfg}};
  Json p{{"tool_version", kToolVersion},
         {"config_hash", fnv1a_hex(canonical.dump())}};
  if (cfg.contains("seed")) p["seed"] = cfg["seed"];
  if (cfg.contains("grid")) p["grid"] = cfg["grid"];
  return p;
}

void write_report(Emitter& out, const std::string& cmd, const Json& cfg,
                  const Json& result, const std::string& name) {
  const Json doc{{"provenance", provenance(cmd, cfg)},
                 {"config", cfg},
                 {"result", result}};
  out.write(name, doc.dump(2) + "\n");
}

Json parse_result(const std::string& text) { return Json::parse(text); }

// ------------------------------------------------------------------ commands

std::string run_maximal(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  const StepFunction f = build_profile(str_at(cfg, "f"), g);
  const std::string op = str_at(cfg, "op");
  const std::string kind_name = str_at(cfg, "kind");
  MaximalKind kind;
  if (kind_name == "uncentered") {
    kind = MaximalKind::Uncentered;
  } else if (kind_name == "centered") {
    kind = MaximalKind::Centered;
  } else {
    bad_config("'kind' must be uncentered or centered");
  }

  StepFunction result;
  if (op == "fast") {
    result = maximal_fast(f, kind);
  } else if (op == "brute") {
    result = maximal_brute(f, kind);
  } else if (op == "llogl") {
    result = maximal_llogl(f, parse_family(str_at(cfg, "family"), g.n_cells));
  } else {
    bad_config("'op' must be fast, brute, or llogl");
  }

  std::string csv = csv_row(std::vector<std::string>{"x", "f", "result"});
  std::vector<double> xs(g.n_cells);
  for (std::size_t i = 0; i < g.n_cells; ++i) {
    xs[i] = g.cell_center(i);
    csv += csv_row(std::vector<std::string>{format_double(xs[i]),
                                            format_double(f.values[i]),
                                            format_double(result.values[i])});
  }
  out.write("maximal.csv", csv);
  out.write("maximal_plot.dat", plot_data(xs, result.values));

  const double peak = max_value(result);
  const Json res{{"grid", parse_result(to_json_text(g))},
                 {"op", op},
                 {"kind", kind_name},
                 {"max_value", peak},
                 {"integral", integrate(result)}};
  write_report(out, "maximal", cfg, res, "maximal.json");
  return "max=" + format_double(peak);
}

std::string run_weights(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  const IntervalFamily family = parse_family(str_at(cfg, "family"), g.n_cells);
  const std::string which = str_at(cfg, "which");

  Json res;
  std::string metric;
  if (which == "lemma4") {
    const StepFunction u = build_profile(str_at(cfg, "u"), g);
    const StepFunction w = build_profile(str_at(cfg, "w"), g);
    const Lemma4Record rec = lemma4_check(u, w, num_at(cfg, "eps"), family);
    res = parse_result(to_json_text(rec));
    res["which"] = which;
    metric = std::string("holds=") + (rec.holds ? "yes" : "no");
  } else {
    const StepFunction w = build_profile(str_at(cfg, "w"), g);
    ConstantEstimate est;
    if (which == "a1") {
      est = a1_constant(w, family);
    } else if (which == "ap") {
      est = ap_constant(w, num_at(cfg, "p"), family);
    } else if (which == "rh") {
      est = rh_constant(w, exponent_from(cfg, "s"), family);
    } else if (which == "ainfty") {
      est = ainfty_fw(w, family);
    } else {
      bad_config("'which' must be a1, ap, rh, ainfty, or lemma4");
    }
    res = parse_result(to_json_text(est));
    res["which"] = which;
    metric = "value=" + format_double(est.value);
  }
  write_report(out, "weights", cfg, res, "weights.json");
  return metric;
}

std::string run_norms(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  const std::string which = str_at(cfg, "which");

  Json res;
  std::string metric;
  if (which == "weak" || which == "lorentz") {
    const StepFunction f = build_profile(str_at(cfg, "f"), g);
    const WeightedMeasure mu{build_profile(str_at(cfg, "measure"), g)};
    const double p = num_at(cfg, "p");
    const double value =
        which == "weak" ? weak_norm(f, p, mu) : lorentz_p1_norm(f, p, mu);
    res = Json{{"which", which}, {"p", p}, {"value", value}};
    metric = "value=" + format_double(value);
  } else if (which == "mixed") {
    const StepFunction f = build_profile(str_at(cfg, "f"), g);
    const StepFunction u = build_profile(str_at(cfg, "u"), g);
    const StepFunction v = build_profile(str_at(cfg, "v"), g);
    const std::string op_name = str_at(cfg, "operator");
    MixedOperator op;
    if (op_name == "m_fv_over_v") {
      op = MixedOperator::MOfFvOverV;
    } else if (op_name == "m_f") {
      op = MixedOperator::MOfF;
    } else {
      bad_config("'operator' must be m_fv_over_v or m_f");
    }
    const std::string rhs_name = str_at(cfg, "rhs_weight");
    RhsWeight rhs;
    if (rhs_name == "mu") {
      rhs = RhsWeight::Mu;
    } else if (rhs_name == "m2u") {
      rhs = RhsWeight::M2u;
    } else if (rhs_name == "u") {
      rhs = RhsWeight::U;
    } else {
      bad_config("'rhs_weight' must be mu, m2u, or u");
    }
    const MixedReport rep = evaluate_mixed_inequality(f, u, v, op, rhs);
    res = parse_result(to_json_text(rep));
    res["which"] = which;
    metric = "ratio=" + format_double(rep.ratio);
  } else if (which == "holder") {
    const WeightedMeasure mu{build_profile(str_at(cfg, "measure"), g)};
    std::vector<StepFunction> hs;
    for (const std::string& spec : str_list_at(cfg, "f_specs")) {
      hs.push_back(build_profile(spec, g));
    }
    const std::vector<double> qs = num_list_at(cfg, "qs");
    const HolderWeakRecord rec =
        holder_weak_check(hs, qs, num_at(cfg, "q"), mu);
    res = parse_result(to_json_text(rec));
    res["which"] = which;
    metric = "ratio=" + format_double(rec.ratio);
  } else {
    bad_config("'which' must be weak, lorentz, mixed, or holder");
  }
  write_report(out, "norms", cfg, res, "norms.json");
  return metric;
}

std::string run_rubio(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  RubioConfig rc;
  rc.u = build_profile(str_at(cfg, "u"), g);
  rc.v1 = build_profile(str_at(cfg, "v1"), g);
  rc.lambda = num_at(cfg, "lambda");
  rc.delta = num_at(cfg, "delta");
  rc.j_max = static_cast<int>(int_at(cfg, "j_max"));
  rc.q = num_at(cfg, "q");
  rc.k0 = num_at(cfg, "k0");
  const StepFunction h = build_profile(str_at(cfg, "h"), g);
  const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();

  RubioMachine machine(rc);
  bool estimated = false;
  double k0 = rc.k0;
  if (!(k0 > 0.0)) {
    k0 = machine.estimate_norm_bound(static_cast<int>(int_at(cfg, "probes")),
                                     seed);
    estimated = true;
    rc.k0 = k0;
    machine = RubioMachine(rc);
  }
  const RubioVerification ver = machine.verify(h);

  Json res = parse_result(to_json_text(ver));
  res["k0"] = k0;
  res["k0_estimated"] = estimated;
  res["q"] = machine.cert_exponent();
  write_report(out, "rubio", cfg, res, "rubio.json");
  return std::string("prop_a=") + (ver.prop_a ? "yes" : "no") +
         " prop_c=" + (ver.prop_c ? "yes" : "no") +
         " k0=" + format_double(k0);
}

std::string run_counterexample(const Json& cfg, Emitter& out) {
  const CounterexampleReport rep =
      sawyer_counterexample(static_cast<int>(int_at(cfg, "k_max")),
                            num_at(cfg, "dx_window"), num_at(cfg, "dx_bulk"));

  std::string csv = csv_row(std::vector<std::string>{"k", "term"});
  std::vector<double> ks(rep.per_k_terms.size());
  std::vector<double> cumulative(rep.per_k_terms.size());
  double running = 0.0;
  for (std::size_t i = 0; i < rep.per_k_terms.size(); ++i) {
    ks[i] = static_cast<double>(11 + i);
    running += rep.per_k_terms[i];
    cumulative[i] = running;
    csv += csv_row(std::vector<std::string>{
        format_double(ks[i]), format_double(rep.per_k_terms[i])});
  }
  out.write("counterexample.csv", csv);
  out.write("counterexample_plot.dat", plot_data(ks, cumulative));

  write_report(out, "counterexample", cfg, parse_result(to_json_text(rep)),
               "counterexample.json");
  return "lhs_partial=" + format_double(rep.lhs_partial) +
         " closed_form=" + format_double(rep.lhs_closed_form) +
         " m2u_max=" + format_double(rep.m2u_max_on_unit);
}

std::string run_sweep(const Json& cfg, Emitter& out) {
  SweepConfig sc;
  sc.r_values = num_list_at(cfg, "r_values");
  sc.radius_values = num_list_at(cfg, "radius_values");
  sc.gap_values = num_list_at(cfg, "gap_values");
  sc.dx_values = num_list_at(cfg, "dx_values");
  sc.u_specs = str_list_at(cfg, "u_specs");
  sc.f_specs = str_list_at(cfg, "f_specs");
  sc.seed = cfg.at("seed").get<std::uint64_t>();

  const SweepResult result = thm2_sweep(sc);

  std::string csv = csv_row(std::vector<std::string>{
      "r", "u", "f", "radius", "gap", "dx", "sup_t_lhs", "maximizing_t", "rhs",
      "ratio", "skipped", "skip_reason"});
  for (const SweepRow& row : result.rows) {
    csv += csv_row(std::vector<std::string>{
        format_double(row.r), row.u_spec, row.f_spec,
        format_double(row.radius), format_double(row.gap),
        format_double(row.dx), format_double(row.report.sup_t_lhs),
        format_double(row.report.maximizing_t), format_double(row.report.rhs),
        format_double(row.report.ratio), row.skipped ? "1" : "0",
        row.skip_reason});
  }
  out.write("sweep.csv", csv);

  const std::size_t ladder = sc.radius_values.size();
  double worst_variation = 0.0;
  for (std::size_t s = 0; s < result.summaries.size(); ++s) {
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < ladder; ++j) {
      const SweepRow& row = result.rows[s * ladder + j];
      if (row.skipped) continue;
      xs.push_back(static_cast<double>(j));
      ys.push_back(row.report.ratio);
    }
    char name[48];
    std::snprintf(name, sizeof name, "sweep_plot_%03zu.dat", s);
    out.write(name, plot_data(xs, ys));
    worst_variation = std::max(worst_variation, result.summaries[s].variation);
  }

  write_report(out, "sweep", cfg, parse_result(to_json_text(result)),
               "sweep.json");
  return "combos=" + std::to_string(result.summaries.size()) +
         " worst_variation=" + format_double(worst_variation);
}

std::string run_annuli(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  const StepFunction f = build_profile(str_at(cfg, "f"), g);
  const StepFunction v = build_profile(str_at(cfg, "v"), g);
  const std::vector<AnnuliRecord> records =
      annuli_check(f, v, static_cast<int>(int_at(cfg, "k_lo")),
                   static_cast<int>(int_at(cfg, "k_hi")));

  std::string csv = csv_row(std::vector<std::string>{
      "k", "cells_in_gk", "max_sublinearity_defect", "c_far", "c_near"});
  double worst = 0.0;
  for (const AnnuliRecord& rec : records) {
    csv += csv_row(std::vector<std::string>{
        std::to_string(rec.k), std::to_string(rec.cells_in_gk),
        format_double(rec.max_sublinearity_defect), format_double(rec.c_far),
        format_double(rec.c_near)});
    worst = std::max(worst, rec.max_sublinearity_defect);
  }
  out.write("annuli.csv", csv);
  write_report(out, "annuli", cfg, parse_result(to_json_text(records)),
               "annuli.json");
  return "annuli=" + std::to_string(records.size()) +
         " max_defect=" + format_double(worst);
}

std::string run_compare_llogl(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  std::vector<StepFunction> fs;
  for (const std::string& spec : str_list_at(cfg, "f_specs")) {
    fs.push_back(build_profile(spec, g));
  }
  const RatioBounds bounds =
      m2_llogl_compare(fs, parse_family(str_at(cfg, "family"), g.n_cells));
  write_report(out, "compare-llogl", cfg, parse_result(to_json_text(bounds)),
               "compare_llogl.json");
  return "c_lo=" + format_double(bounds.c_lo) +
         " c_hi=" + format_double(bounds.c_hi);
}

std::string run_vector(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  std::vector<StepFunction> fs;
  for (const std::string& spec : str_list_at(cfg, "f_specs")) {
    fs.push_back(build_profile(spec, g));
  }
  const StepFunction u = build_profile(str_at(cfg, "u"), g);
  const StepFunction v = build_profile(str_at(cfg, "v"), g);
  const MixedReport rep = vector_valued_check(fs, num_at(cfg, "q"), u, v);
  write_report(out, "vector", cfg, parse_result(to_json_text(rep)),
               "vector.json");
  return "ratio=" + format_double(rep.ratio);
}

std::string run_multilinear(const Json& cfg, Emitter& out) {
  const Grid g = grid_from(cfg.at("grid"));
  const StepFunction f1 = build_profile(str_at(cfg, "f1"), g);
  const StepFunction f2 = build_profile(str_at(cfg, "f2"), g);
  const StepFunction u = build_profile(str_at(cfg, "u"), g);
  const StepFunction v = build_profile(str_at(cfg, "v"), g);
  const MultilinearRecord rec = multilinear_check(
      f1, f2, u, v, parse_family(str_at(cfg, "family"), g.n_cells));
  write_report(out, "multilinear", cfg, parse_result(to_json_text(rec)),
               "multilinear.json");
  return std::string("pointwise=") + (rec.pointwise_holds ? "yes" : "no") +
         " ratio_chain=" + format_double(rec.ratio_chain);
}

std::string dispatch(const std::string& cmd, const Json& cfg, Emitter& out) {
  if (cmd == "maximal") return run_maximal(cfg, out);
  if (cmd == "weights") return run_weights(cfg, out);
  if (cmd == "norms") return run_norms(cfg, out);
  if (cmd == "rubio") return run_rubio(cfg, out);
  if (cmd == "counterexample") return run_counterexample(cfg, out);
  if (cmd == "sweep") return run_sweep(cfg, out);
  if (cmd == "annuli") return run_annuli(cfg, out);
  if (cmd == "compare-llogl") return run_compare_llogl(cfg, out);
  if (cmd == "vector") return run_vector(cfg, out);
  if (cmd == "multilinear") return run_multilinear(cfg, out);
  bad_config("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for mixed weighted weak-type "
               "inequalities: maximal operators, weight constants, weak and "
               "Lorentz norms, majorant iteration, and the divergent "
               "staircase example."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  std::int64_t seed_flag = -1;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--set", overrides, "override config entries, key=value");
  app.add_option("--seed", seed_flag, "seed recorded in reports and used by "
                                      "randomized probes");

  struct Sub {
    const char* name;
    const char* desc;
  };
  const Sub subs[] = {
      {"maximal", "maximal function of a profile (fast, brute, or Orlicz)"},
      {"weights", "weight-class constants: a1, ap, reverse Holder, "
                  "Fujii-Wilson, product check"},
      {"norms", "weak/Lorentz norms, the mixed weak-type functional, and the "
                "weak Holder product check"},
      {"rubio", "majorant series built from the weighted maximal operator, "
                "with its three properties verified"},
      {"counterexample", "divergent left side vs. finite right side for the "
                         "staircase weight"},
      {"sweep", "mixed-inequality ratios across power exponents and "
                "refinement ladders"},
      {"annuli", "dyadic annulus decomposition bounds for power weights"},
      {"compare-llogl", "iterated maximal vs. Orlicz maximal cellwise ratios"},
      {"vector", "vector-valued maximal inequality report"},
      {"multilinear", "bilinear maximal pointwise bound and norm chain"},
  };

  // per-command convenience flags, applied over the config
  std::vector<std::string> flag_overrides;
  auto capture = [&flag_overrides](const std::string& key) {
    return [&flag_overrides, key](const std::string& value) {
      flag_overrides.push_back(key + "=" + value);
    };
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    const std::string name = s.name;
    if (name == "counterexample") {
      sub->add_option_function<std::string>("--k-max", capture("k_max"));
      sub->add_option_function<std::string>("--dx-window",
                                            capture("dx_window"));
      sub->add_option_function<std::string>("--dx-bulk", capture("dx_bulk"));
    } else if (name == "sweep") {
      sub->add_option_function<std::vector<std::string>>(
          "--r", [&flag_overrides](const std::vector<std::string>& rs) {
            std::string arr = "[";
            for (std::size_t i = 0; i < rs.size(); ++i) {
              if (i) arr += ',';
              arr += rs[i];
            }
            flag_overrides.push_back("r_values=" + arr + "]");
          });
      sub->add_option_function<std::vector<std::string>>(
          "--u", [&flag_overrides](const std::vector<std::string>& us) {
            Json arr = Json::array();
            for (const std::string& u : us) arr.push_back(u);
            flag_overrides.push_back("u_specs=" + arr.dump());
          });
      sub->add_option_function<std::vector<std::string>>(
          "--f", [&flag_overrides](const std::vector<std::string>& fs) {
            Json arr = Json::array();
            for (const std::string& f : fs) arr.push_back(f);
            flag_overrides.push_back("f_specs=" + arr.dump());
          });
    } else if (name == "maximal") {
      sub->add_option_function<std::string>("--f", capture("f"));
      sub->add_option_function<std::string>("--op", capture("op"));
      sub->add_option_function<std::string>("--kind", capture("kind"));
    } else if (name == "weights") {
      sub->add_option_function<std::string>("--which", capture("which"));
      sub->add_option_function<std::string>("--w", capture("w"));
      sub->add_option_function<std::string>("--family", capture("family"));
    } else if (name == "norms") {
      sub->add_option_function<std::string>("--which", capture("which"));
      sub->add_option_function<std::string>("--f", capture("f"));
      sub->add_option_function<std::string>("--p", capture("p"));
    } else if (name == "rubio") {
      sub->add_option_function<std::string>("--k0", capture("k0"));
      sub->add_option_function<std::string>("--probes", capture("probes"));
      sub->add_option_function<std::string>("--j-max", capture("j_max"));
    } else if (name == "annuli") {
      sub->add_option_function<std::string>("--k-lo", capture("k_lo"));
      sub->add_option_function<std::string>("--k-hi", capture("k_hi"));
    } else if (name == "compare-llogl" || name == "multilinear") {
      sub->add_option_function<std::string>("--family", capture("family"));
    } else if (name == "vector") {
      sub->add_option_function<std::string>("--q", capture("q"));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Json cfg = default_config(cmd);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) bad_config("cannot read config file '" + config_path + "'");
      Json file_cfg = Json::parse(in, nullptr, false);
      if (file_cfg.is_discarded()) {
        bad_config("config file '" + config_path + "' is not valid JSON");
      }
      merge_into(cfg, file_cfg, "");
    }
    for (const std::string& spec : flag_overrides) apply_override(cfg, spec);
    for (const std::string& spec : overrides) apply_override(cfg, spec);
    if (seed_flag >= 0) cfg["seed"] = seed_flag;
    check_against_defaults(cfg, default_config(cmd), "");

    Emitter out;
    out.dir = out_dir;
    std::filesystem::create_directories(out.dir);
    const std::string metric = dispatch(cmd, cfg, out);
    std::cout << cmd << ": " << metric << " -> " << out.paths() << "\n";
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
