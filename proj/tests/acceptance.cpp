// Acceptance suite: exercises the end-to-end contracts at full scale and
// prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "walkgen/benchmarks.hpp"
#include "walkgen/codec.hpp"
#include "walkgen/experiment.hpp"
#include "walkgen/parser.hpp"
#include "walkgen/report_io.hpp"
#include "walkgen/search.hpp"

using namespace walkgen;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct TriangleBatch {
    ExperimentSummary summary;
    int full = 0;
    double worst_seconds = 0.0;
};

TriangleBatch run_triangle(const std::string& name, std::uint64_t base_seed) {
    const BenchmarkEntry* bench = find_benchmark(name);
    ProgramModel model = parse_program(bench->source);
    GoalSet goals = extract_goals(model);
    ExperimentConfig cfg;
    cfg.program = name;
    cfg.repetitions = 100;
    cfg.params.seed = base_seed;
    ExperimentSummary s = run_experiment(model, goals, cfg);
    TriangleBatch batch;
    batch.full = s.full_coverage_runs;
    for (const auto& r : s.runs)
        batch.worst_seconds = std::max(batch.worst_seconds, r.wall_ms / 1000.0);
    batch.summary = std::move(s);
    return batch;
}

std::map<std::string, TriangleBatch> g_triangle_batches;

// ---- 1. full coverage on the triangle programs ----

void criterion_full_triangle_coverage() {
    bool pass = true;
    std::string detail;
    std::uint64_t seed = 1;
    for (const char* name : {"tri-int", "tri-real", "tri-real-wide"}) {
        TriangleBatch batch = run_triangle(name, seed);
        seed += 100;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %d/100 full, worst %.2fs; ", name, batch.full,
                      batch.worst_seconds);
        detail += buf;
        if (batch.full < 95 || batch.worst_seconds >= 60.0) pass = false;
        g_triangle_batches.emplace(name, std::move(batch));
    }
    report(1, "triangle programs reach 100% of 24 goals in at least 95 of 100 runs", pass,
           detail);
}

// ---- 2. ten million random cases never find the equilateral goal ----

void criterion_random_baseline() {
    const BenchmarkEntry* bench = find_benchmark("tri-int");
    ProgramModel model = parse_program(bench->source);
    GoalSet goals = extract_goals(model);
    SearchParams params;
    params.seed = 42;
    auto t0 = std::chrono::steady_clock::now();
    SearchReport r = random_test(model, goals, 10'000'000, params);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool equilateral_uncovered = false;
    for (const auto& g : goals.goals) {
        if (g.node_id == bench->hard_goal_node && g.kind == GoalKind::decision && g.polarity) {
            equilateral_uncovered = !r.per_goal[static_cast<std::size_t>(g.id)].covered;
        }
    }
    bool pass = equilateral_uncovered && r.coverage_pct < 70.0 && seconds < 600.0;
    char buf[180];
    std::snprintf(buf, sizeof buf,
                  "coverage %.2f%% (< 70 required), equilateral %s, %.1fs for 1e7 cases",
                  r.coverage_pct, equilateral_uncovered ? "uncovered" : "COVERED", seconds);
    report(2, "random testing cannot reach the equilateral goal on tri-int", pass, buf);
}

// ---- 3. exhaustive oracle on small-domain programs ----

const char* kMicroNested =
    "var x: real(0, 255, 0);\n"
    "var y: real(0, 255, 0);\n"
    "if (x > 200) {\n"
    "  if (x == y) { target high_equal; } else { target high_unequal; }\n"
    "} else { target low; }\n";

const char* kMicroInfeasible =
    "var x: real(0, 255, 0);\n"
    "var y: real(0, 255, 0);\n"
    "if (x < y && y < x) { target impossible; } else { target possible; }\n"
    "if (x != x) { target never; }\n";

const char* kMicroLoop =
    "var x: real(0, 255, 0);\n"
    "var y: real(0, 255, 0);\n"
    "s = x * 0;\n"
    "n = x;\n"
    "while (n > 0) {\n"
    "  s = s + n;\n"
    "  n = n - 10;\n"
    "}\n"
    "if (s > y * 3) { target big; } else { target small; }\n"
    "if (x / 4 == y && x > 100) { target aligned; }\n";

void criterion_exhaustive_oracle() {
    struct Micro {
        const char* name;
        const char* source;
        std::uint64_t seed;
    };
    const Micro micros[] = {{"micro-nested", kMicroNested, 11},
                            {"micro-infeasible", kMicroInfeasible, 12},
                            {"micro-loop", kMicroLoop, 13}};
    bool pass = true;
    std::string detail;
    FitnessConfig fitness;
    for (const Micro& micro : micros) {
        ProgramModel model = parse_program(micro.source);
        GoalSet goals = extract_goals(model);

        // Brute force over the full 256 x 256 input space.
        std::vector<bool> feasible(static_cast<std::size_t>(goals.size()), false);
        std::vector<Cost> brute_min(static_cast<std::size_t>(goals.size()),
                                    Cost::unreached());
        for (std::int64_t x = 0; x < 256; ++x) {
            for (std::int64_t y = 0; y < 256; ++y) {
                ExecutionTrace t = execute(model, InputVector{{x, y}});
                for (const auto& g : goals.goals) {
                    Cost c = goal_cost(g, model, t, fitness);
                    if (!c.reached) continue;
                    if (c.is_zero()) feasible[static_cast<std::size_t>(g.id)] = true;
                    if (c < brute_min[static_cast<std::size_t>(g.id)])
                        brute_min[static_cast<std::size_t>(g.id)] = c;
                }
            }
        }

        SearchParams params;
        params.seed = micro.seed;
        SearchReport r = walktest(model, goals, params);

        int infeasible = 0;
        for (const auto& g : goals.goals) {
            bool feas = feasible[static_cast<std::size_t>(g.id)];
            if (!feas) ++infeasible;
            const GoalOutcome& out = r.per_goal[static_cast<std::size_t>(g.id)];
            if (out.covered != feas) {
                pass = false;
                detail += std::string(micro.name) + " goal " + std::to_string(g.id) +
                          " coverage mismatch; ";
            }
            if (brute_min[static_cast<std::size_t>(g.id)].reached) {
                if (!out.ever_reached ||
                    out.best_cost > brute_min[static_cast<std::size_t>(g.id)].value) {
                    pass = false;
                    detail += std::string(micro.name) + " goal " + std::to_string(g.id) +
                              " pooled cost above brute-force optimum; ";
                }
            }
        }
        detail += std::string(micro.name) + " " + std::to_string(r.covered_goals) + "/" +
                  std::to_string(r.total_goals) + " covered (" + std::to_string(infeasible) +
                  " infeasible); ";
    }
    report(3, "walk search covers exactly the brute-force-feasible goal sets", pass, detail);
}

// ---- 4. codec properties at scale ----

void criterion_codec() {
    bool pass = true;
    std::string detail;
    Rng rng(20202);
    for (const auto& bench : builtin_benchmarks()) {
        ProgramModel model = parse_program(bench.source);
        CodecLayout layout = CodecLayout::for_variables(model.variables);
        for (int trial = 0; trial < 10'000; ++trial) {
            InputVector v;
            for (const auto& dom : model.variables) v.values.push_back(rng.uniform_value(dom));
            if (!(decode_input(encode_input(v, layout), layout) == v)) {
                pass = false;
                detail += bench.name + " round-trip failed; ";
                break;
            }
        }
        InputVector v;
        for (const auto& dom : model.variables) v.values.push_back(rng.uniform_value(dom));
        BitString b = encode_input(v, layout);
        auto n = neighbors(b);
        std::set<std::string> uniq;
        for (const auto& x : n) {
            if (x.hamming(b) != 1) pass = false;
            uniq.insert(x.to_string());
        }
        if (static_cast<int>(n.size()) != layout.total_width || uniq.size() != n.size()) {
            pass = false;
            detail += bench.name + " neighbourhood malformed; ";
        }
    }
    for (std::uint64_t u = 0; u + 1 < (1u << 16); ++u) {
        std::uint64_t diff = gray_encode_value(u) ^ gray_encode_value(u + 1);
        if (diff == 0 || (diff & (diff - 1)) != 0) {
            pass = false;
            detail += "16-bit adjacency broken; ";
            break;
        }
    }
    if (detail.empty())
        detail = "round-trips on 10000 vectors per layout, 16-bit adjacency, flip sets";
    report(4, "codec invariants", pass, detail);
}

// ---- 5. fitness axioms on random expressions ----

void criterion_fitness_axioms() {
    bool pass = true;
    std::string detail;
    Rng rng(777);
    FitnessConfig cfg;
    int checked = 0;
    for (int trial = 0; trial < 400 && pass; ++trial) {
        auto cond = testing::RandomCondition::generate(rng, 4, 4);
        ProgramModel m = parse_program(testing::one_decision_program(cond));
        GoalSet gs = extract_goals(m);
        GoalExpr raw = goal_expr_from_condition(*m.decisions[0]->condition);
        GoalExpr pushed = push_negation(raw);
        GoalExpr complemented = push_negation(GoalExpr::negation(raw));

        // Exhaustive truth table over a small domain: the normalised goal
        // matches plain evaluation and its complement everywhere.
        std::vector<long long> vals(static_cast<std::size_t>(cond.var_count), -2);
        for (;;) {
            InputVector in;
            for (long long v : vals) in.values.push_back(v);
            ExecutionTrace t = execute(m, in);
            bool satisfied = cond.eval(vals);
            std::vector<AtomObs> obs(t.atom_values.begin() + t.occurrences[0].atoms_begin,
                                     t.atom_values.end());
            if (testing::eval_goal_expr(pushed, obs) != satisfied ||
                testing::eval_goal_expr(complemented, obs) != !satisfied) {
                pass = false;
                detail = "negation-push equivalence violated for " + cond.text();
                break;
            }
            Cost c = goal_cost(gs.goals[0], m, t, cfg);
            if (!c.reached || c.value < 0.0 || (c.value == 0.0) != satisfied) {
                pass = false;
                detail = "zero-iff-satisfied violated for " + cond.text();
                break;
            }
            ++checked;
            std::size_t i = 0;
            while (i < vals.size() && ++vals[i] > 1) vals[i++] = -2;
            if (i == vals.size()) break;
        }
    }

    // atom monotonicity
    AtomInfo info;
    FitnessConfig k1;
    double prev = atom_distance(GoalExpr::relation(0, RelOp::eq), info, AtomObs{64, 0}, k1);
    for (std::int64_t a = 63; a >= 0; --a) {
        double d = atom_distance(GoalExpr::relation(0, RelOp::eq), info, AtomObs{a, 0}, k1);
        if (d > prev) pass = false;
        prev = d;
    }
    prev = atom_distance(GoalExpr::relation(0, RelOp::lt), info, AtomObs{64, 10}, k1);
    for (std::int64_t a = 63; a >= -64; --a) {
        double d = atom_distance(GoalExpr::relation(0, RelOp::lt), info, AtomObs{a, 10}, k1);
        if (d > prev) pass = false;
        prev = d;
    }
    if (pass && detail.empty())
        detail = std::to_string(checked) +
                 " exhaustive truth-table evaluations over random expressions, monotone atoms";
    report(5, "fitness axioms", pass, detail);
}

// ---- 6. sorting contract ----

void criterion_sorting() {
    bool pass = true;
    Rng rng(31001);
    for (int trial = 0; trial < 500 && pass; ++trial) {
        int goals = 2 + static_cast<int>(rng.below(20));
        SolutionPool pool(goals, 6);
        for (int g = 0; g < goals; ++g) {
            int entries = static_cast<int>(rng.below(7));
            for (int e = 0; e < entries; ++e)
                pool.insert(g, InputVector{{static_cast<std::int64_t>(rng.below(50))}},
                            static_cast<double>(rng.below(9)));
        }
        std::vector<int> unsolved;
        for (int g = 0; g < goals; ++g)
            if (rng.below(5) != 0) unsolved.push_back(g);
        auto order = sort_goals(pool, unsolved);
        if (order != sort_goals(pool, unsolved)) pass = false;
        auto key = [&](int id) {
            auto w = pool.min_cost(id);
            return std::make_tuple(!w.has_value(), w.value_or(0.0), -pool.size(id), id);
        };
        for (std::size_t i = 1; i < order.size(); ++i)
            if (!(key(order[i - 1]) < key(order[i]))) pass = false;
    }
    report(6, "goal ordering is total, deterministic and keyed by weight/entries/id", pass,
           "500 randomized pool states");
}

// ---- 7. byte-identical reports ----

void criterion_determinism() {
    bool pass = true;
    std::string detail;
    struct Probe {
        std::string program;
        std::string algo;
        std::uint64_t seed;
        std::uint64_t cases;
    };
    const Probe probes[] = {{"tri-int", "walktest", 2001, 0},
                            {"line-rect", "walktest", 2002, 0},
                            {"tri-int", "random", 2003, 200'000}};
    for (const Probe& probe : probes) {
        ProgramModel model = parse_program(find_benchmark(probe.program)->source);
        GoalSet goals = extract_goals(model);
        SearchParams params;
        params.seed = probe.seed;
        auto once = [&]() {
            SearchReport r = probe.algo == "random"
                                 ? random_test(model, goals, probe.cases, params)
                                 : walktest(model, goals, params);
            r.program = probe.program;
            return report_json_text(r, model);
        };
        if (once() != once()) {
            pass = false;
            detail += probe.program + "/" + probe.algo + " diverged; ";
        }
    }
    if (detail.empty()) detail = "three program/algorithm/seed probes, two runs each";
    report(7, "identical configuration produces byte-identical reports", pass, detail);
}

// ---- 8. precision insensitivity ----

void criterion_precision() {
    auto median_evals = [&](const std::string& name) -> double {
        const TriangleBatch& batch = g_triangle_batches.at(name);
        std::vector<double> evals;
        for (const auto& r : batch.summary.runs)
            if (r.evaluations_to_full)
                evals.push_back(static_cast<double>(*r.evaluations_to_full));
        std::sort(evals.begin(), evals.end());
        std::size_t n = evals.size();
        if (n == 0) return 0.0;
        return n % 2 ? evals[n / 2] : 0.5 * (evals[n / 2 - 1] + evals[n / 2]);
    };
    double narrow = median_evals("tri-real");
    double wide = median_evals("tri-real-wide");
    bool pass = narrow > 0.0 && wide > 0.0 && wide <= 3.0 * narrow;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "median evaluations to full coverage: %.0f vs %.0f (ratio %.2f, limit 3.0)",
                  narrow, wide, narrow > 0 ? wide / narrow : 0.0);
    report(8, "widening the input precision keeps the effort within 3x", pass, buf);
}

}  // namespace

int main() {
    criterion_full_triangle_coverage();
    criterion_random_baseline();
    criterion_exhaustive_oracle();
    criterion_codec();
    criterion_fitness_axioms();
    criterion_sorting();
    criterion_determinism();
    criterion_precision();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
