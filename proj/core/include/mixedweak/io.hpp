#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixedweak/experiments.hpp"
#include "mixedweak/rubio.hpp"
#include "mixedweak/weight_constants.hpp"

namespace mixedweak {

// Shortest exact decimal form used for every number written to CSV and plot
// files, so identical runs produce identical bytes.
std::string format_double(double x);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a_hex(std::string_view data);

// Throws ValidationError when the path cannot be written.
void write_text_file(const std::string& path, std::string_view content);

// Fields joined with commas plus a newline; fields containing commas or
// quotes are quoted.
std::string csv_row(std::span<const std::string> fields);

// Two numeric columns, one "x y" line per point.
std::string plot_data(std::span<const double> xs, std::span<const double> ys);

// Canonical JSON text: sorted keys, two-space indent, trailing newline.
// Non-finite numbers serialize as null; flags carry that information.
std::string to_json_text(const Grid& g);
std::string to_json_text(const ConstantEstimate& e);
std::string to_json_text(const Lemma4Record& r);
std::string to_json_text(const MixedReport& r);
std::string to_json_text(const HolderWeakRecord& r);
std::string to_json_text(const RubioIteration& it);
std::string to_json_text(const RubioVerification& v);
std::string to_json_text(const CounterexampleReport& r);
std::string to_json_text(const SweepResult& r);
std::string to_json_text(const std::vector<AnnuliRecord>& rs);
std::string to_json_text(const RatioBounds& b);
std::string to_json_text(const MultilinearRecord& r);

}  // namespace mixedweak
