#include "walkgen/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

namespace walkgen {

using nlohmann::json;

ExperimentSummary run_experiment(const ProgramModel& model, const GoalSet& goals,
                                 const ExperimentConfig& cfg) {
    int reps = cfg.repetitions;
    std::vector<SearchReport> runs(static_cast<std::size_t>(reps));

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, reps);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= reps) return;
            SearchParams p = cfg.params;
            p.seed = cfg.params.seed + static_cast<std::uint64_t>(i);
            SearchReport r = cfg.algorithm == "random"
                                 ? random_test(model, goals, p.random_cases, p, cfg.fitness)
                                 : walktest(model, goals, p, cfg.fitness);
            r.program = cfg.program;
            runs[static_cast<std::size_t>(i)] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ExperimentSummary s;
    s.runs = std::move(runs);
    s.min_coverage_pct = 100.0;
    double sum_cov = 0.0, sum_sec = 0.0, sum_eval = 0.0;
    std::vector<double> to_full;
    for (const SearchReport& r : s.runs) {
        sum_cov += r.coverage_pct;
        s.min_coverage_pct = std::min(s.min_coverage_pct, r.coverage_pct);
        s.max_coverage_pct = std::max(s.max_coverage_pct, r.coverage_pct);
        if (r.covered_goals == r.total_goals) ++s.full_coverage_runs;
        sum_sec += r.wall_ms / 1000.0;
        s.max_seconds = std::max(s.max_seconds, r.wall_ms / 1000.0);
        sum_eval += static_cast<double>(r.evaluations);
        if (r.evaluations_to_full) to_full.push_back(static_cast<double>(*r.evaluations_to_full));
    }
    if (reps > 0) {
        s.mean_coverage_pct = sum_cov / reps;
        s.avg_seconds = sum_sec / reps;
        s.avg_evaluations = sum_eval / reps;
    } else {
        s.min_coverage_pct = 0.0;
    }
    if (!to_full.empty()) {
        std::sort(to_full.begin(), to_full.end());
        std::size_t n = to_full.size();
        s.median_evaluations_to_full =
            n % 2 ? to_full[n / 2] : 0.5 * (to_full[n / 2 - 1] + to_full[n / 2]);
    }
    return s;
}

std::optional<double> reduction_pct(double walk_avg, double base_avg) {
    if (base_avg <= 0.0) return std::nullopt;
    return (1.0 - walk_avg / base_avg) * 100.0;
}

json summary_to_json(const ExperimentSummary& s, const ExperimentConfig& cfg) {
    json runs = json::array();
    for (const SearchReport& r : s.runs) {
        json item{{"seed", r.params.seed},
                  {"coverage_pct", r.coverage_pct},
                  {"covered", r.covered_goals},
                  {"total", r.total_goals},
                  {"seconds", r.wall_ms / 1000.0},
                  {"evaluations", r.evaluations},
                  {"restarts_used", r.restarts_used}};
        if (r.evaluations_to_full) item["evaluations_to_full"] = *r.evaluations_to_full;
        runs.push_back(std::move(item));
    }
    json j{{"schema", "walkgen-summary-v1"},
           {"program", cfg.program},
           {"algorithm", cfg.algorithm},
           {"repetitions", cfg.repetitions},
           {"base_seed", cfg.params.seed},
           {"coverage_pct",
            json{{"mean", s.mean_coverage_pct},
                 {"min", s.min_coverage_pct},
                 {"max", s.max_coverage_pct}}},
           {"full_coverage_runs", s.full_coverage_runs},
           {"seconds", json{{"avg", s.avg_seconds}, {"max", s.max_seconds}}},
           {"avg_evaluations", s.avg_evaluations},
           {"runs", std::move(runs)}};
    if (s.median_evaluations_to_full) j["median_evaluations_to_full"] = *s.median_evaluations_to_full;
    return j;
}

std::string merged_timeline_csv(const ExperimentSummary& s) {
    std::string out = "seed,elapsed_ms,evaluations,covered,coverage_pct\n";
    char line[160];
    for (const SearchReport& r : s.runs) {
        for (const TimelinePoint& t : r.timeline) {
            double pct = r.total_goals == 0 ? 100.0 : 100.0 * t.covered / r.total_goals;
            std::snprintf(line, sizeof line, "%llu,%.3f,%llu,%d,%.4f\n",
                          static_cast<unsigned long long>(r.params.seed), t.elapsed_ms,
                          static_cast<unsigned long long>(t.evaluations), t.covered, pct);
            out += line;
        }
    }
    return out;
}

}  // namespace walkgen
