#pragma once

#include <string>

#include "walkgen/goals.hpp"
#include "walkgen/search.hpp"

#include <json.hpp>

namespace walkgen {

// Canonical per-run report. Contains only run-deterministic fields: the
// same program, parameters and seed always serialise to identical bytes.
// Wall-clock timings live in the CSV timeline and the experiment summary.
nlohmann::json report_to_json(const SearchReport& report, const ProgramModel& model);

std::string report_json_text(const SearchReport& report, const ProgramModel& model);

// Timeline rows: elapsed_ms,evaluations,covered,coverage_pct
std::string timeline_csv(const SearchReport& report);

// Goal listing: [{id, node, kind, polarity, expr_text}]
nlohmann::json goals_to_json(const GoalSet& goals);

}  // namespace walkgen
