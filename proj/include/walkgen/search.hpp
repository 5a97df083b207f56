#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkgen/codec.hpp"
#include "walkgen/fitness.hpp"
#include "walkgen/goals.hpp"
#include "walkgen/pool.hpp"
#include "walkgen/rng.hpp"

namespace walkgen {

struct SearchParams {
    int restarts = 100;        // r: outer restart bound
    int seeding_runs = 100;    // t: random evaluations priming each restart
    int walk_restarts = 5;     // m1: pool pulls per walk invocation
    int walk_steps = 5;        // m2: flip rounds per pull
    double walk_probability = 2.0 / 3.0;  // p: chance of stepping anywhere
    int pool_capacity = 40;    // q: per-goal store size
    std::uint64_t seed = 1;
    std::int64_t loop_budget = kDefaultLoopBudget;
    std::uint64_t random_cases = 10'000'000;  // baseline case count
};

struct TimelinePoint {
    double elapsed_ms = 0.0;   // wall clock; omitted from the canonical report
    std::uint64_t evaluations = 0;
    int covered = 0;
};

struct GoalOutcome {
    int goal_id = -1;
    bool covered = false;
    bool ever_reached = false;
    double best_cost = 0.0;    // best cost ever pooled; meaningless unless reached
    std::optional<InputVector> witness;
};

struct SearchReport {
    std::string program;
    std::string algorithm;
    SearchParams params;
    FitnessConfig fitness;
    int total_goals = 0;
    int covered_goals = 0;
    double coverage_pct = 0.0;
    std::vector<GoalOutcome> per_goal;
    std::vector<InputVector> test_cases;  // deduplicated covering inputs
    std::vector<TimelinePoint> timeline;  // one point per coverage increase
    std::uint64_t evaluations = 0;
    std::uint64_t walks = 0;
    int restarts_used = 0;
    std::optional<std::uint64_t> evaluations_to_full;  // set when 100% reached
    double wall_ms = 0.0;
};

class SearchRun;  // engine internals

// Chooses the next flip index: uniformly among the minimum-cost flips when
// they improve on the current cost; otherwise uniformly over all flips with
// probability p and among the minimum-cost flips with probability 1 - p.
int walk_pick(const std::vector<Cost>& flip_costs, Cost current, double p, Rng& rng);

// One application of the random-walk operator to a goal: repeatedly pulls a
// pooled solution (or a fresh random one), flips every bit of its Gray form,
// scores all flips against every open goal, and steps to an improving flip,
// or probabilistically to a non-improving one. Exposed for direct testing.
void random_walk(SearchRun& run, int goal_id, Rng& rng);

// Multi-restart search: each restart reinitialises the pool, primes it with
// random tests, then repeatedly walks the easiest-looking unsolved goal.
// Coverage, witnesses and the timeline persist across restarts.
SearchReport walktest(const ProgramModel& model, const GoalSet& goals,
                      const SearchParams& params, const FitnessConfig& fitness = {});

// Pure random-test baseline with the same coverage accounting and report.
SearchReport random_test(const ProgramModel& model, const GoalSet& goals,
                         std::uint64_t cases, const SearchParams& params,
                         const FitnessConfig& fitness = {});

// Engine state shared by walktest and the walk operator; constructible in
// tests for fine-grained checks.
class SearchRun {
public:
    SearchRun(const ProgramModel& model, const GoalSet& goals, const SearchParams& params,
              const FitnessConfig& fitness, bool pooling = true);

    // Starts a fresh restart: clears the pool and reopens every goal.
    // Run-level coverage records are untouched.
    void begin_restart();

    // Executes one input, scores every open goal, updates pool and
    // coverage, and returns the cost of focus_goal (unreached when < 0).
    Cost evaluate(const InputVector& input, int focus_goal);

    InputVector random_input(Rng& rng);

    bool covered(int goal_id) const { return covered_[static_cast<std::size_t>(goal_id)]; }
    int covered_count() const { return covered_count_; }
    bool is_open(int goal_id) const {
        return std::find(open_.begin(), open_.end(), goal_id) != open_.end();
    }
    const std::vector<int>& open_goals() const { return open_; }
    std::uint64_t evaluations() const { return evaluations_; }
    std::uint64_t walks() const { return walks_; }

    SolutionPool& pool() { return pool_; }
    const CodecLayout& layout() const { return layout_; }
    const SearchParams& params() const { return params_; }

    SearchReport finish(std::string program, std::string algorithm, int restarts_used);

private:
    friend void random_walk(SearchRun& run, int goal_id, Rng& rng);
    friend SearchReport walktest(const ProgramModel&, const GoalSet&, const SearchParams&,
                                 const FitnessConfig&);
    friend SearchReport random_test(const ProgramModel&, const GoalSet&, std::uint64_t,
                                    const SearchParams&, const FitnessConfig&);

    void close_goal(int goal_id, const InputVector& witness);
    double now_ms() const;

    const ProgramModel& model_;
    const GoalSet& goals_;
    SearchParams params_;
    FitnessConfig fitness_;
    bool pooling_;
    CodecLayout layout_;
    SolutionPool pool_;
    std::vector<std::uint8_t> covered_;
    std::vector<std::optional<InputVector>> witness_;
    std::vector<double> best_cost_;
    std::vector<std::uint8_t> ever_reached_;
    std::vector<int> open_;                        // restart-local work list
    std::vector<std::vector<int>> open_by_node_;
    int covered_count_ = 0;
    std::uint64_t evaluations_ = 0;
    std::uint64_t walks_ = 0;
    std::vector<TimelinePoint> timeline_;
    std::optional<std::uint64_t> evaluations_to_full_;
    ExecutionTrace scratch_;
    std::vector<double> cost_scratch_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace walkgen
