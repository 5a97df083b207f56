#include "walkgen/report_io.hpp"

#include <cstdio>

namespace walkgen {

using nlohmann::json;

namespace {

json input_to_json(const InputVector& v, const ProgramModel& model) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.values.size(); ++i)
        arr.push_back(render_value(v.values[i], model.variables[i].decimals));
    return arr;
}

json params_to_json(const SearchParams& p, const FitnessConfig& f) {
    return json{{"r", p.restarts},
                {"t", p.seeding_runs},
                {"m1", p.walk_restarts},
                {"m2", p.walk_steps},
                {"p", p.walk_probability},
                {"q", p.pool_capacity},
                {"k", f.k},
                {"combinator", combinator_name(f.combinator)},
                {"loop_budget", p.loop_budget},
                {"random_cases", p.random_cases}};
}

}  // namespace

json report_to_json(const SearchReport& report, const ProgramModel& model) {
    json per_goal = json::array();
    for (const GoalOutcome& g : report.per_goal) {
        json item{{"id", g.goal_id},
                  {"covered", g.covered},
                  {"reached", g.ever_reached}};
        if (g.ever_reached) item["best_cost"] = g.best_cost;
        if (g.witness) item["covered_by"] = input_to_json(*g.witness, model);
        per_goal.push_back(std::move(item));
    }
    json cases = json::array();
    for (const InputVector& v : report.test_cases) cases.push_back(input_to_json(v, model));
    json timeline = json::array();
    for (const TimelinePoint& t : report.timeline)
        timeline.push_back(json{{"evaluations", t.evaluations}, {"covered", t.covered}});

    json j{{"schema", "walkgen-report-v1"},
           {"program", report.program},
           {"algorithm", report.algorithm},
           {"seed", report.params.seed},
           {"rng", kRngName},
           {"params", params_to_json(report.params, report.fitness)},
           {"goals", json{{"total", report.total_goals},
                          {"covered", report.covered_goals},
                          {"coverage_pct", report.coverage_pct}}},
           {"per_goal", std::move(per_goal)},
           {"test_cases", std::move(cases)},
           {"timeline", std::move(timeline)},
           {"evaluations", report.evaluations},
           {"walks", report.walks},
           {"restarts_used", report.restarts_used}};
    if (report.evaluations_to_full) j["evaluations_to_full"] = *report.evaluations_to_full;
    return j;
}

std::string report_json_text(const SearchReport& report, const ProgramModel& model) {
    return report_to_json(report, model).dump(2) + "\n";
}

std::string timeline_csv(const SearchReport& report) {
    std::string out = "elapsed_ms,evaluations,covered,coverage_pct\n";
    char line[128];
    for (const TimelinePoint& t : report.timeline) {
        double pct = report.total_goals == 0 ? 100.0 : 100.0 * t.covered / report.total_goals;
        std::snprintf(line, sizeof line, "%.3f,%llu,%d,%.4f\n", t.elapsed_ms,
                      static_cast<unsigned long long>(t.evaluations), t.covered, pct);
        out += line;
    }
    return out;
}

json goals_to_json(const GoalSet& goals) {
    json arr = json::array();
    for (const TestGoal& g : goals.goals) {
        arr.push_back(json{{"id", g.id},
                           {"node", g.node_id},
                           {"kind", g.kind == GoalKind::decision ? "decision" : "condition"},
                           {"polarity", g.polarity ? "TRUE" : "FALSE"},
                           {"expr_text", g.text}});
    }
    return arr;
}

}  // namespace walkgen
