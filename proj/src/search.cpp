#include "walkgen/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace walkgen {

namespace {
constexpr double kNoCost = std::numeric_limits<double>::infinity();
}

SearchRun::SearchRun(const ProgramModel& model, const GoalSet& goals,
                     const SearchParams& params, const FitnessConfig& fitness, bool pooling)
    : model_(model),
      goals_(goals),
      params_(params),
      fitness_(fitness),
      pooling_(pooling),
      layout_(CodecLayout::for_variables(model.variables)),
      pool_(goals.size(), params.pool_capacity),
      covered_(static_cast<std::size_t>(goals.size()), 0),
      witness_(static_cast<std::size_t>(goals.size())),
      best_cost_(static_cast<std::size_t>(goals.size()), kNoCost),
      ever_reached_(static_cast<std::size_t>(goals.size()), 0),
      cost_scratch_(static_cast<std::size_t>(goals.size()), kNoCost),
      start_(std::chrono::steady_clock::now()) {
    open_by_node_.resize(model.decisions.size());
    begin_restart();
}

// Each restart attacks the full goal set with a fresh pool; coverage already
// achieved in earlier restarts stays in the run-level record, so a restart
// re-solving an easy goal costs a little budget but re-establishes the
// solutions that chained goals depend on.
void SearchRun::begin_restart() {
    pool_.clear();
    open_.clear();
    for (int i = 0; i < goals_.size(); ++i) open_.push_back(i);
    for (auto& v : open_by_node_) v.clear();
    for (const TestGoal& g : goals_.goals)
        open_by_node_[static_cast<std::size_t>(g.node_id)].push_back(g.id);
}

double SearchRun::now_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
}

InputVector SearchRun::random_input(Rng& rng) {
    InputVector v;
    v.values.reserve(model_.variables.size());
    for (const auto& dom : model_.variables) v.values.push_back(rng.uniform_value(dom));
    return v;
}

void SearchRun::close_goal(int goal_id, const InputVector& witness) {
    open_.erase(std::remove(open_.begin(), open_.end(), goal_id), open_.end());
    auto& on_node =
        open_by_node_[static_cast<std::size_t>(goals_.goals[static_cast<std::size_t>(goal_id)].node_id)];
    on_node.erase(std::remove(on_node.begin(), on_node.end(), goal_id), on_node.end());

    if (covered_[static_cast<std::size_t>(goal_id)]) return;
    covered_[static_cast<std::size_t>(goal_id)] = 1;
    witness_[static_cast<std::size_t>(goal_id)] = witness;
    ++covered_count_;
    timeline_.push_back(TimelinePoint{now_ms(), evaluations_, covered_count_});
    if (covered_count_ == goals_.size()) evaluations_to_full_ = evaluations_;
}

Cost SearchRun::evaluate(const InputVector& input, int focus_goal) {
    execute_into(scratch_, model_, input, params_.loop_budget);
    ++evaluations_;

    // Fold the minimum cost per open goal over all occurrences in one pass.
    std::vector<int> touched;
    for (const DecisionOccurrence& occ : scratch_.occurrences) {
        const auto& open = open_by_node_[static_cast<std::size_t>(occ.node)];
        if (open.empty()) continue;
        const DecisionNode& node = *model_.decisions[static_cast<std::size_t>(occ.node)];
        const AtomObs* atoms = scratch_.atom_values.data() + occ.atoms_begin;
        for (int gid : open) {
            double d = occurrence_distance(goals_.goals[static_cast<std::size_t>(gid)].expr,
                                           node, atoms, fitness_);
            double& slot = cost_scratch_[static_cast<std::size_t>(gid)];
            if (slot == kNoCost) touched.push_back(gid);
            if (d < slot || slot == kNoCost) slot = d;
        }
    }

    Cost focus = Cost::unreached();
    std::vector<int> newly_closed;
    for (int gid : touched) {
        double d = cost_scratch_[static_cast<std::size_t>(gid)];
        cost_scratch_[static_cast<std::size_t>(gid)] = kNoCost;
        if (gid == focus_goal) focus = Cost::at(d);
        ever_reached_[static_cast<std::size_t>(gid)] = 1;
        if (d < best_cost_[static_cast<std::size_t>(gid)])
            best_cost_[static_cast<std::size_t>(gid)] = d;
        if (pooling_) pool_.insert(gid, input, d);
        if (d == 0.0) newly_closed.push_back(gid);
    }
    for (int gid : newly_closed) close_goal(gid, input);
    return focus;
}

SearchReport SearchRun::finish(std::string program, std::string algorithm, int restarts_used) {
    SearchReport r;
    r.program = std::move(program);
    r.algorithm = std::move(algorithm);
    r.params = params_;
    r.fitness = fitness_;
    r.total_goals = goals_.size();
    r.covered_goals = covered_count_;
    r.coverage_pct = goals_.size() == 0 ? 100.0 : 100.0 * covered_count_ / goals_.size();
    for (int i = 0; i < goals_.size(); ++i) {
        GoalOutcome o;
        o.goal_id = i;
        o.covered = covered_[static_cast<std::size_t>(i)] != 0;
        o.ever_reached = ever_reached_[static_cast<std::size_t>(i)] != 0;
        o.best_cost = best_cost_[static_cast<std::size_t>(i)] == kNoCost
                          ? 0.0
                          : best_cost_[static_cast<std::size_t>(i)];
        o.witness = witness_[static_cast<std::size_t>(i)];
        r.per_goal.push_back(std::move(o));
    }
    for (int i = 0; i < goals_.size(); ++i) {
        const auto& w = witness_[static_cast<std::size_t>(i)];
        if (!w) continue;
        if (std::find(r.test_cases.begin(), r.test_cases.end(), *w) == r.test_cases.end())
            r.test_cases.push_back(*w);
    }
    r.timeline = timeline_;
    r.evaluations = evaluations_;
    r.walks = walks_;
    r.restarts_used = restarts_used;
    r.evaluations_to_full = evaluations_to_full_;
    r.wall_ms = now_ms();
    return r;
}

int walk_pick(const std::vector<Cost>& flip_costs, Cost current, double p, Rng& rng) {
    Cost best = flip_costs.front();
    for (const Cost& c : flip_costs)
        if (c < best) best = c;

    if (!(best < current) && rng.chance(p))
        return static_cast<int>(rng.below(flip_costs.size()));

    std::vector<int> optima;
    for (std::size_t i = 0; i < flip_costs.size(); ++i)
        if (flip_costs[i] == best) optima.push_back(static_cast<int>(i));
    return optima[static_cast<std::size_t>(rng.below(optima.size()))];
}

// Steps the walk as long as flips keep paying off; otherwise takes a
// probabilistic step from the full flip set to escape the neighbourhood.
void random_walk(SearchRun& run, int goal_id, Rng& rng) {
    ++run.walks_;
    const int width = run.layout_.total_width;

    for (int pull = 0; pull < run.params_.walk_restarts; ++pull) {
        if (!run.is_open(goal_id)) return;

        InputVector current;
        Cost current_cost = Cost::unreached();
        if (!run.pool_.empty(goal_id)) {
            const PoolEntry& e = run.pool_.pick_random(goal_id, rng);
            current = e.input;
            current_cost = Cost::at(e.cost);
        } else {
            current = run.random_input(rng);
            current_cost = run.evaluate(current, goal_id);
            if (!run.is_open(goal_id)) return;
        }
        BitString code = encode_input(current, run.layout_);

        std::vector<BitString> flips;
        std::vector<Cost> costs;
        for (int step = 0; step < run.params_.walk_steps; ++step) {
            flips.clear();
            costs.clear();
            for (int bit = 0; bit < width; ++bit) {
                BitString n = code;
                n.flip(bit);
                costs.push_back(run.evaluate(decode_input(n, run.layout_), goal_id));
                flips.push_back(std::move(n));
            }
            if (!run.is_open(goal_id)) return;

            int pick = walk_pick(costs, current_cost, run.params_.walk_probability, rng);
            current_cost = costs[static_cast<std::size_t>(pick)];
            code = std::move(flips[static_cast<std::size_t>(pick)]);
        }
    }
}

SearchReport walktest(const ProgramModel& model, const GoalSet& goals,
                      const SearchParams& params, const FitnessConfig& fitness) {
    SearchRun run(model, goals, params, fitness);
    int restart = 0;
    while (run.covered_count() < goals.size() && restart < params.restarts) {
        Rng rng = Rng::stream(params.seed, static_cast<std::uint64_t>(restart));
        run.begin_restart();
        for (int i = 0; i < params.seeding_runs && !run.open_goals().empty(); ++i)
            run.evaluate(run.random_input(rng), -1);

        // Walk the easiest goal not yet attempted in this restart. A goal
        // that gains pool entries mid-restart (covering its parent decision
        // seeds it) is picked up promptly, while a stuck low-weight goal
        // cannot monopolise the walk budget. When every open goal has had
        // its turn the attempt marks reset and the sweep starts over.
        int walked = 0;
        std::vector<std::uint8_t> attempted(static_cast<std::size_t>(goals.size()), 0);
        while (!run.open_goals().empty() && walked < goals.size()) {
            std::vector<int> order = sort_goals(run.pool(), run.open_goals());
            int chosen = -1;
            for (int g : order) {
                if (!attempted[static_cast<std::size_t>(g)]) {
                    chosen = g;
                    break;
                }
            }
            if (chosen < 0) {
                std::fill(attempted.begin(), attempted.end(), 0);
                chosen = order.front();
            }
            attempted[static_cast<std::size_t>(chosen)] = 1;
            random_walk(run, chosen, rng);
            ++walked;
        }
        ++restart;
    }
    return run.finish("", "walktest", restart);
}

SearchReport random_test(const ProgramModel& model, const GoalSet& goals, std::uint64_t cases,
                         const SearchParams& params, const FitnessConfig& fitness) {
    SearchRun run(model, goals, params, fitness, /*pooling=*/false);
    Rng rng = Rng::stream(params.seed, 0);
    for (std::uint64_t i = 0; i < cases && run.covered_count() < goals.size(); ++i)
        run.evaluate(run.random_input(rng), -1);
    return run.finish("", "random", 0);
}

}  // namespace walkgen
