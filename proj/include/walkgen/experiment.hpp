#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkgen/search.hpp"

#include <json.hpp>

namespace walkgen {

struct ExperimentConfig {
    std::string program;      // benchmark name or .wt path
    std::string algorithm = "walktest";  // walktest | random
    int repetitions = 100;
    SearchParams params;
    FitnessConfig fitness;
    int threads = 0;          // 0: hardware concurrency
};

struct ExperimentSummary {
    std::vector<SearchReport> runs;  // ordered by seed
    double mean_coverage_pct = 0.0;
    double min_coverage_pct = 0.0;
    double max_coverage_pct = 0.0;
    int full_coverage_runs = 0;
    double avg_seconds = 0.0;
    double max_seconds = 0.0;
    double avg_evaluations = 0.0;
    std::optional<double> median_evaluations_to_full;  // over runs that reached 100%
};

// Runs the configured algorithm `repetitions` times with seeds
// seed+0 .. seed+reps-1. Repetitions run concurrently; aggregation is
// keyed by seed, so the summary does not depend on scheduling.
ExperimentSummary run_experiment(const ProgramModel& model, const GoalSet& goals,
                                 const ExperimentConfig& cfg);

// Runtime reduction of `walk_avg` relative to `base_avg`, in percent.
// Undefined for a zero baseline (nullopt).
std::optional<double> reduction_pct(double walk_avg, double base_avg);

nlohmann::json summary_to_json(const ExperimentSummary& s, const ExperimentConfig& cfg);

// Merged time-vs-coverage rows across runs: seed,elapsed_ms,evaluations,
// covered,coverage_pct.
std::string merged_timeline_csv(const ExperimentSummary& s);

}  // namespace walkgen
