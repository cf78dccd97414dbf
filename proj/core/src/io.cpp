#include "mixedweak/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "mixedweak/errors.hpp"

namespace mixedweak {

namespace {

using Json = nlohmann::json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json grid_json(const Grid& g) {
  return Json{{"left", g.left},
              {"dx", g.dx},
              {"n_cells", g.n_cells},
              {"origin_gap", g.origin_gap}};
}

Json estimate_json(const ConstantEstimate& e) {
  return Json{{"value", e.value},
              {"interval", {e.interval_begin, e.interval_end}},
              {"family", e.family_name},
              {"family_size", e.family_size},
              {"dx", e.dx},
              {"n_cells", e.n_cells},
              {"origin_gap", e.origin_gap}};
}

Json mixed_json(const MixedReport& r) {
  return Json{{"sup_t_lhs", r.sup_t_lhs},
              {"maximizing_t", r.maximizing_t},
              {"rhs", r.rhs},
              {"ratio", r.ratio},
              {"zero_rhs", r.zero_rhs},
              {"t_grid_size", r.t_grid_size},
              {"dx", r.dx},
              {"n_cells", r.n_cells},
              {"origin_gap", r.origin_gap}};
}

Json iteration_json(const RubioIteration& it) {
  return Json{{"term_norms", it.term_norms}, {"decay_rho", it.decay_rho}};
}

Json sweep_row_json(const SweepRow& row) {
  Json j{{"r", row.r},        {"u", row.u_spec}, {"f", row.f_spec},
         {"radius", row.radius}, {"gap", row.gap},  {"dx", row.dx},
         {"skipped", row.skipped}};
  if (row.skipped) {
    j["skip_reason"] = row.skip_reason;
  } else {
    j["report"] = mixed_json(row.report);
  }
  return j;
}

Json sweep_summary_json(const SweepSummary& s) {
  return Json{{"r", s.r},
              {"u", s.u_spec},
              {"f", s.f_spec},
              {"min_ratio", s.min_ratio},
              {"max_ratio", s.max_ratio},
              {"variation", s.variation},
              {"monotone_nondecreasing", s.monotone_nondecreasing},
              {"rows", s.rows}};
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view data) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw ValidationError("short write to '" + path + "'");
  }
}

std::string csv_row(std::span<const std::string> fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      row += '"';
      for (char c : f) {
        if (c == '"') row += '"';
        row += c;
      }
      row += '"';
    } else {
      row += f;
    }
  }
  row += '\n';
  return row;
}

std::string plot_data(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ValidationError("plot_data: column lengths differ");
  }
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += format_double(xs[i]);
    out += ' ';
    out += format_double(ys[i]);
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Grid& g) { return dump(grid_json(g)); }

std::string to_json_text(const ConstantEstimate& e) {
  return dump(estimate_json(e));
}

std::string to_json_text(const Lemma4Record& r) {
  return dump(Json{{"lhs", estimate_json(r.lhs)},
                   {"rhs_bound", r.rhs_bound},
                   {"holds", r.holds}});
}

std::string to_json_text(const MixedReport& r) { return dump(mixed_json(r)); }

std::string to_json_text(const HolderWeakRecord& r) {
  return dump(Json{{"lhs", r.lhs},
                   {"rhs_product", r.rhs_product},
                   {"ratio", r.ratio}});
}

std::string to_json_text(const RubioIteration& it) {
  return dump(iteration_json(it));
}

std::string to_json_text(const RubioVerification& v) {
  return dump(Json{{"prop_a", v.prop_a},
                   {"prop_b_ratio", v.prop_b_ratio},
                   {"prop_c", v.prop_c},
                   {"prop_c_max_defect", v.prop_c_max_defect},
                   {"iteration", iteration_json(v.iteration)}});
}

std::string to_json_text(const CounterexampleReport& r) {
  return dump(Json{{"k_max", r.k_max},
                   {"dx_window", r.dx_window},
                   {"dx_bulk", r.dx_bulk},
                   {"lhs_partial", r.lhs_partial},
                   {"lhs_closed_form", r.lhs_closed_form},
                   {"rhs_estimate", r.rhs_estimate},
                   {"m2u_max_on_unit", r.m2u_max_on_unit},
                   {"per_k_terms", r.per_k_terms}});
}

std::string to_json_text(const SweepResult& r) {
  Json rows = Json::array();
  for (const SweepRow& row : r.rows) rows.push_back(sweep_row_json(row));
  Json summaries = Json::array();
  for (const SweepSummary& s : r.summaries) {
    summaries.push_back(sweep_summary_json(s));
  }
  return dump(Json{{"rows", rows}, {"summaries", summaries}});
}

std::string to_json_text(const std::vector<AnnuliRecord>& rs) {
  Json arr = Json::array();
  for (const AnnuliRecord& rec : rs) {
    arr.push_back(Json{{"k", rec.k},
                       {"cells_in_gk", rec.cells_in_gk},
                       {"max_sublinearity_defect", rec.max_sublinearity_defect},
                       {"c_far", rec.c_far},
                       {"c_near", rec.c_near}});
  }
  return dump(Json{{"annuli", arr}});
}

std::string to_json_text(const RatioBounds& b) {
  return dump(Json{{"c_lo", b.c_lo},
                   {"c_hi", b.c_hi},
                   {"cells_counted", b.cells_counted}});
}

std::string to_json_text(const MultilinearRecord& r) {
  return dump(Json{{"pointwise_holds", r.pointwise_holds},
                   {"max_pointwise_defect", r.max_pointwise_defect},
                   {"lhs", r.lhs},
                   {"rhs_chain", r.rhs_chain},
                   {"rhs_final", r.rhs_final},
                   {"ratio_chain", r.ratio_chain},
                   {"ratio_final", r.ratio_final}});
}

}  // namespace mixedweak
