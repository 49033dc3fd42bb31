#pragma once

#include <iosfwd>
#include <string>

#include "sympspec/analysis.hpp"
#include "sympspec/symplectic.hpp"

namespace sympspec {

// JSON serialization of reports; output is deterministic for identical inputs.

std::string to_json(const SweepReport& report);
std::string to_json(const SweepReport& report, const ConvergenceStats& stats);
std::string to_json(const GcoReport& report);
std::string to_json(const BoundsReport& report);
std::string to_json(const WilliamsonResult& result, bool include_m);

SweepReport sweep_report_from_json(const std::string& json_text);

/// CSV: one row per (n, k, value) triple, header "n,k,value"; n ascending,
/// within each n values ascending with k = 1-based rank.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

} // namespace sympspec
