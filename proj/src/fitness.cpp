#include "walkgen/fitness.hpp"

#include <cmath>

namespace walkgen {

const char* combinator_name(Combinator c) {
    return c == Combinator::corrected ? "corrected" : "paper";
}

bool combinator_from_name(const std::string& name, Combinator& out) {
    if (name == "corrected") {
        out = Combinator::corrected;
        return true;
    }
    if (name == "paper" || name == "swapped") {
        out = Combinator::swapped;
        return true;
    }
    return false;
}

namespace {

double pow10_d(int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= 10.0;
    return v;
}

// |a - b| without signed overflow, expressed in the atom's value units.
double abs_gap(std::int64_t a, std::int64_t b, int scale_decimals) {
    __int128 d = static_cast<__int128>(a) - b;
    if (d < 0) d = -d;
    return static_cast<double>(d) / pow10_d(scale_decimals);
}

double dir_gap(std::int64_t a, std::int64_t b, int scale_decimals) {
    __int128 d = static_cast<__int128>(a) - b;
    return static_cast<double>(d) / pow10_d(scale_decimals);
}

}  // namespace

double atom_distance(const GoalExpr& atom, const AtomInfo& info, const AtomObs& obs,
                     const FitnessConfig& cfg) {
    if (atom.kind == GoalExpr::Kind::atom_bool) {
        bool observed = obs.lhs != 0;
        return observed == atom.expected ? 0.0 : cfg.k;
    }
    std::int64_t a = obs.lhs;
    std::int64_t b = obs.rhs;
    switch (atom.rel) {
        case RelOp::eq:
            return a == b ? 0.0 : abs_gap(a, b, info.scale_decimals) + cfg.k;
        case RelOp::ne:
            return a != b ? 0.0 : cfg.k;
        case RelOp::lt:
            return a < b ? 0.0 : dir_gap(a, b, info.scale_decimals) + cfg.k;
        case RelOp::le:
            return a <= b ? 0.0 : dir_gap(a, b, info.scale_decimals) + cfg.k;
        case RelOp::gt:
            return a > b ? 0.0 : dir_gap(b, a, info.scale_decimals) + cfg.k;
        case RelOp::ge:
            return a >= b ? 0.0 : dir_gap(b, a, info.scale_decimals) + cfg.k;
    }
    return cfg.k;
}

double combine(BoolOp op, double left, double right, const FitnessConfig& cfg) {
    bool sum;
    if (cfg.combinator == Combinator::corrected)
        sum = op == BoolOp::logic_and;
    else
        sum = op == BoolOp::logic_or;
    return sum ? left + right : std::min(left, right);
}

double occurrence_distance(const GoalExpr& expr, const DecisionNode& node,
                           const AtomObs* atoms, const FitnessConfig& cfg) {
    switch (expr.kind) {
        case GoalExpr::Kind::atom_rel:
        case GoalExpr::Kind::atom_bool: {
            const AtomInfo& info = node.atoms[static_cast<std::size_t>(expr.atom_index)];
            return atom_distance(expr, info, atoms[expr.atom_index], cfg);
        }
        case GoalExpr::Kind::conj:
        case GoalExpr::Kind::disj: {
            BoolOp op = expr.kind == GoalExpr::Kind::conj ? BoolOp::logic_and : BoolOp::logic_or;
            double acc = occurrence_distance(expr.kids[0], node, atoms, cfg);
            for (std::size_t i = 1; i < expr.kids.size(); ++i)
                acc = combine(op, acc, occurrence_distance(expr.kids[i], node, atoms, cfg), cfg);
            return acc;
        }
        case GoalExpr::Kind::neg:
            // Goals are normalised before costing; a stray negation is
            // resolved through push_negation.
            return occurrence_distance(push_negation(expr), node, atoms, cfg);
    }
    return cfg.k;
}

Cost goal_cost(const TestGoal& goal, const DecisionNode& node, const ExecutionTrace& trace,
               const FitnessConfig& cfg) {
    Cost best = Cost::unreached();
    for (const DecisionOccurrence& occ : trace.occurrences) {
        if (occ.node != goal.node_id) continue;
        double d = occurrence_distance(goal.expr, node, trace.atom_values.data() + occ.atoms_begin, cfg);
        Cost c = Cost::at(d);
        if (c < best || !best.reached) best = c;
        if (best.is_zero()) break;
    }
    return best;
}

Cost goal_cost(const TestGoal& goal, const ProgramModel& model, const ExecutionTrace& trace,
               const FitnessConfig& cfg) {
    return goal_cost(goal, *model.decisions[static_cast<std::size_t>(goal.node_id)], trace, cfg);
}

}  // namespace walkgen
