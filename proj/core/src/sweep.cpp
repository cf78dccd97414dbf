#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mixedweak/errors.hpp"
#include "mixedweak/experiments.hpp"
#include "mixedweak/weight_descriptor.hpp"

namespace mixedweak {

namespace {

void require_ladder(const std::vector<double>& xs, const char* what,
                    bool ascending) {
  if (xs.empty()) {
    throw ValidationError(std::string("sweep config: empty ") + what);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || xs[i] <= 0.0) {
      throw ValidationError(std::string("sweep config: ") + what +
                            " entries must be finite positive");
    }
    if (i > 0 && (ascending ? xs[i] < xs[i - 1] : xs[i] > xs[i - 1])) {
      throw ValidationError(std::string("sweep config: ") + what +
                            " must be sorted " +
                            (ascending ? "ascending" : "descending"));
    }
  }
}

}  // namespace

SweepResult thm2_sweep(const SweepConfig& cfg) {
  require_ladder(cfg.r_values, "r_values", true);
  for (double r : cfg.r_values) {
    if (r < 1.0) {
      throw ValidationError("sweep config: requires r >= 1");
    }
  }
  require_ladder(cfg.radius_values, "radius_values", true);
  require_ladder(cfg.gap_values, "gap_values", false);
  require_ladder(cfg.dx_values, "dx_values", false);
  const std::size_t ladder = cfg.radius_values.size();
  if (cfg.gap_values.size() != ladder || cfg.dx_values.size() != ladder) {
    throw ValidationError(
        "sweep config: radius/gap/dx ladders must have equal length");
  }
  if (cfg.u_specs.empty() || cfg.f_specs.empty()) {
    throw ValidationError("sweep config: needs at least one u and one f spec");
  }
  // every ladder point must define a valid grid; fail before any work
  for (std::size_t j = 0; j < ladder; ++j) {
    (void)Grid::symmetric(cfg.radius_values[j], cfg.gap_values[j],
                          cfg.dx_values[j]);
  }

  SweepResult out;
  out.rows.reserve(cfg.r_values.size() * cfg.u_specs.size() *
                   cfg.f_specs.size() * ladder);
  for (double r : cfg.r_values) {
    for (const std::string& u_spec : cfg.u_specs) {
      for (const std::string& f_spec : cfg.f_specs) {
        SweepSummary summary;
        summary.r = r;
        summary.u_spec = u_spec;
        summary.f_spec = f_spec;
        summary.min_ratio = std::numeric_limits<double>::infinity();
        summary.monotone_nondecreasing = true;
        double prev_ratio = -1.0;
        for (std::size_t j = 0; j < ladder; ++j) {
          SweepRow row;
          row.r = r;
          row.u_spec = u_spec;
          row.f_spec = f_spec;
          row.radius = cfg.radius_values[j];
          row.gap = cfg.gap_values[j];
          row.dx = cfg.dx_values[j];
          const Grid grid = Grid::symmetric(row.radius, row.gap, row.dx);
          try {
            const StepFunction v =
                sample_weight(WeightDescriptor::power(-r), grid);
            const StepFunction u = build_profile(u_spec, grid);
            const StepFunction f = build_profile(f_spec, grid);
            row.report = evaluate_mixed_inequality(
                f, u, v, MixedOperator::MOfFvOverV, RhsWeight::Mu);
          } catch (const ValidationError& e) {
            row.skipped = true;
            row.skip_reason = e.what();
          }
          if (!row.skipped) {
            const double ratio = row.report.ratio;
            summary.min_ratio = std::min(summary.min_ratio, ratio);
            summary.max_ratio = std::max(summary.max_ratio, ratio);
            if (ratio < prev_ratio * (1.0 - 1e-12)) {
              summary.monotone_nondecreasing = false;
            }
            prev_ratio = ratio;
            ++summary.rows;
          }
          out.rows.push_back(std::move(row));
        }
        if (summary.rows == 0) {
          summary.min_ratio = 0.0;
          summary.monotone_nondecreasing = false;
        }
        summary.variation = summary.min_ratio > 0.0
                                ? summary.max_ratio / summary.min_ratio
                                : 0.0;
        out.summaries.push_back(std::move(summary));
      }
    }
  }
  return out;
}

}  // namespace mixedweak
