#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "walkgen/benchmarks.hpp"
#include "walkgen/fitness.hpp"
#include "walkgen/parser.hpp"

using namespace walkgen;

namespace {

double rel_distance(RelOp op, std::int64_t a, std::int64_t b, double k = 1.0,
                    int scale = 0) {
    FitnessConfig cfg;
    cfg.k = k;
    AtomInfo info;
    info.op = op;
    info.scale_decimals = scale;
    return atom_distance(GoalExpr::relation(0, op), info, AtomObs{a, b}, cfg);
}

}  // namespace

TEST_CASE("atomic distances follow the piecewise scheme") {
    CHECK(rel_distance(RelOp::eq, 7, 7) == 0.0);
    CHECK(rel_distance(RelOp::eq, 7, 4) == 4.0);   // |7-4| + 1
    CHECK(rel_distance(RelOp::ne, 7, 4) == 0.0);
    CHECK(rel_distance(RelOp::ne, 4, 4) == 1.0);   // K
    CHECK(rel_distance(RelOp::lt, 5, 3) == 3.0);   // (5-3) + 1
    CHECK(rel_distance(RelOp::lt, 3, 5) == 0.0);
    CHECK(rel_distance(RelOp::le, 5, 5) == 0.0);
    CHECK(rel_distance(RelOp::le, 6, 5) == 2.0);
    CHECK(rel_distance(RelOp::gt, 3, 5) == 3.0);   // (5-3) + 1
    CHECK(rel_distance(RelOp::ge, 3, 5) == 3.0);
    CHECK(rel_distance(RelOp::gt, 5, 3) == 0.0);
}

TEST_CASE("boolean atoms score zero or K") {
    FitnessConfig cfg;
    cfg.k = 1.0;
    AtomInfo info;
    info.is_bool = true;
    CHECK(atom_distance(GoalExpr::boolean(0, true), info, AtomObs{1, 0}, cfg) == 0.0);
    CHECK(atom_distance(GoalExpr::boolean(0, true), info, AtomObs{0, 0}, cfg) == 1.0);
    CHECK(atom_distance(GoalExpr::boolean(0, false), info, AtomObs{0, 0}, cfg) == 0.0);
}

TEST_CASE("distances use value units for scaled operands") {
    // operands are scaled by 10^3: a gap of 1500 scaled units is 1.5
    CHECK(rel_distance(RelOp::eq, 2500, 1000, 1.0, 3) == doctest::Approx(2.5));
}

TEST_CASE("half-open int32 gaps do not overflow") {
    CHECK(rel_distance(RelOp::eq, 2147483647, -2147483648) == doctest::Approx(4294967296.0));
}

TEST_CASE("combinators fold conjunction and disjunction") {
    FitnessConfig corrected;  // and -> sum, or -> min
    CHECK(combine(BoolOp::logic_and, 3.0, 0.0, corrected) == 3.0);
    CHECK(combine(BoolOp::logic_or, 3.0, 0.0, corrected) == 0.0);
    CHECK(combine(BoolOp::logic_and, 0.0, 0.0, corrected) == 0.0);
    CHECK(combine(BoolOp::logic_or, 0.0, 0.0, corrected) == 0.0);

    FitnessConfig swapped;
    swapped.combinator = Combinator::swapped;  // and -> min, or -> sum
    CHECK(combine(BoolOp::logic_and, 3.0, 0.0, swapped) == 0.0);
    CHECK(combine(BoolOp::logic_or, 3.0, 0.0, swapped) == 3.0);
    CHECK(combine(BoolOp::logic_and, 0.0, 0.0, swapped) == 0.0);
    CHECK(combine(BoolOp::logic_or, 0.0, 0.0, swapped) == 0.0);
}

TEST_CASE("equilateral input satisfies the equilateral decision goal") {
    ProgramModel m = parse_program(find_benchmark("tri-int")->source);
    GoalSet gs = extract_goals(m);
    FitnessConfig cfg;
    ExecutionTrace t = execute(m, InputVector{{3, 3, 3}});
    // decision 2 is the b == c check reached through a == b and the
    // triangle inequality
    bool found = false;
    for (const auto& g : gs.goals) {
        if (g.node_id == 2 && g.kind == GoalKind::decision && g.polarity) {
            found = true;
            Cost c = goal_cost(g, m, t, cfg);
            CHECK(c.reached);
            CHECK(c.value == 0.0);
        }
    }
    CHECK(found);
}

TEST_CASE("goals on unexecuted decisions are unreached and order last") {
    ProgramModel m = parse_program(find_benchmark("tri-int")->source);
    GoalSet gs = extract_goals(m);
    FitnessConfig cfg;
    ExecutionTrace t = execute(m, InputVector{{1, 2, 3}});  // a != b: node 1 never runs
    Cost c = goal_cost(gs.goals[2], m, t, cfg);             // node 1 decision TRUE
    CHECK_FALSE(c.reached);
    CHECK(Cost::at(1e18) < c);
    CHECK_FALSE(c < Cost::at(0.0));
    CHECK(c == Cost::unreached());
}

TEST_CASE("complement of the guard scores the minimum conjunct gap") {
    ProgramModel m = parse_program(
        "var A: int32;\nvar B: int32;\nvar C: int32;\n"
        "if (A > 0 && B > 0 && C > 0) { target 1; } else { target 2; }\n");
    GoalSet gs = extract_goals(m);
    FitnessConfig cfg;  // corrected, K = 1
    ExecutionTrace t = execute(m, InputVector{{1, 1, 1}});
    // (A <= 0 || B <= 0 || C <= 0): each atom distance is (1 - 0) + 1 = 2,
    // disjunction takes the minimum
    Cost c = goal_cost(gs.goals[1], m, t, cfg);
    CHECK(c.reached);
    CHECK(c.value == 2.0);
}

TEST_CASE("looping decisions score the best occurrence") {
    ProgramModel m = parse_program(
        "var n: int32;\n"
        "i = n;\n"
        "while (i > 3) { i = i - 1; }\n");
    GoalSet gs = extract_goals(m);
    FitnessConfig cfg;
    ExecutionTrace t = execute(m, InputVector{{10}});
    // occurrences see i = 10..3; for "i > 3" FALSE the best is i == 3 -> 0
    for (const auto& g : gs.goals) CHECK(goal_cost(g, m, t, cfg).is_zero());
}

TEST_CASE("corrected cost is zero exactly when the expression is satisfied") {
    Rng rng(1234);
    FitnessConfig cfg;
    int zeros = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto cond = testing::RandomCondition::generate(rng, 4, 4);
        ProgramModel m = parse_program(testing::one_decision_program(cond));
        GoalSet gs = extract_goals(m);
        for (int sample = 0; sample < 8; ++sample) {
            std::vector<long long> vals;
            for (int v = 0; v < cond.var_count; ++v)
                vals.push_back(static_cast<long long>(rng.below(9)) - 4);
            InputVector in;
            for (long long v : vals) in.values.push_back(v);
            ExecutionTrace t = execute(m, in);
            Cost c = goal_cost(gs.goals[0], m, t, cfg);
            REQUIRE(c.reached);
            CHECK(c.value >= 0.0);
            bool satisfied = cond.eval(vals);
            CHECK((c.value == 0.0) == satisfied);
            if (satisfied) ++zeros;
            // the complement goal mirrors it
            Cost cc = goal_cost(gs.goals[1], m, t, cfg);
            CHECK((cc.value == 0.0) == !satisfied);
            if (!satisfied) CHECK(cc.value == 0.0);
        }
    }
    CHECK(zeros > 100);  // both outcomes exercised
}

TEST_CASE("unsatisfied atoms score at least K") {
    Rng rng(55);
    for (int trial = 0; trial < 2000; ++trial) {
        RelOp op = static_cast<RelOp>(rng.below(6));
        std::int64_t a = static_cast<std::int64_t>(rng.below(2001)) - 1000;
        std::int64_t b = static_cast<std::int64_t>(rng.below(2001)) - 1000;
        double d = rel_distance(op, a, b, 2.5);
        CHECK(d >= 0.0);
        std::vector<AtomObs> obs{{a, b}};
        bool sat = testing::eval_goal_expr(GoalExpr::relation(0, op), obs);
        if (sat)
            CHECK(d == 0.0);
        else
            CHECK(d >= 2.5);
    }
}

TEST_CASE("equality distance shrinks monotonically with the gap") {
    double prev = rel_distance(RelOp::eq, 100, 0);
    for (std::int64_t a = 99; a >= 0; --a) {
        double d = rel_distance(RelOp::eq, a, 0);
        CHECK(d <= prev);
        prev = d;
    }
    CHECK(prev == 0.0);
}

TEST_CASE("less-than distance never increases as the left side decreases") {
    double prev = rel_distance(RelOp::lt, 50, 10);
    for (std::int64_t a = 49; a >= -50; --a) {
        double d = rel_distance(RelOp::lt, a, 10);
        CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("goal cost is a pure function of its inputs") {
    ProgramModel m = parse_program(find_benchmark("tri-int")->source);
    GoalSet gs = extract_goals(m);
    FitnessConfig cfg;
    ExecutionTrace t = execute(m, InputVector{{5, 5, 9}});
    for (const auto& g : gs.goals) {
        Cost a = goal_cost(g, m, t, cfg);
        Cost b = goal_cost(g, m, t, cfg);
        CHECK(a == b);
    }
}

TEST_CASE("swapped combinator can score an unsatisfied compound as zero") {
    // One satisfied conjunct makes the min-fold zero even though the
    // conjunction is false; atomic goals are unaffected. This is the
    // behavioural difference the mode switch preserves.
    ProgramModel m = parse_program(
        "var a: int32;\nvar b: int32;\n"
        "if (a > 0 && b > 0) { target t; }\n");
    GoalSet gs = extract_goals(m);
    ExecutionTrace t = execute(m, InputVector{{1, -5}});  // outcome FALSE

    FitnessConfig corrected;
    CHECK(goal_cost(gs.goals[0], m, t, corrected).value == 6.0);  // 0 + (5 + 1)

    FitnessConfig swapped;
    swapped.combinator = Combinator::swapped;
    CHECK(goal_cost(gs.goals[0], m, t, swapped).value == 0.0);
    // atoms agree across modes
    for (const auto& g : gs.goals) {
        if (g.kind != GoalKind::condition) continue;
        CHECK(goal_cost(g, m, t, corrected).value == goal_cost(g, m, t, swapped).value);
    }
}

TEST_CASE("combinator names round-trip") {
    Combinator c;
    CHECK(combinator_from_name("corrected", c));
    CHECK(c == Combinator::corrected);
    CHECK(combinator_from_name("paper", c));
    CHECK(c == Combinator::swapped);
    CHECK_FALSE(combinator_from_name("bogus", c));
    CHECK(std::string(combinator_name(Combinator::swapped)) == "paper");
}
