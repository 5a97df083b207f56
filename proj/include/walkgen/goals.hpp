#pragma once

#include <string>
#include <vector>

#include "walkgen/ast.hpp"

namespace walkgen {

// Boolean target over a decision node's observation atoms. Goals are kept
// in negation normal form: a neg node may appear in inputs to
// push_negation but never in an extracted goal.
struct GoalExpr {
    enum class Kind { atom_rel, atom_bool, conj, disj, neg };
    Kind kind = Kind::atom_bool;
    int atom_index = -1;       // atom_rel / atom_bool
    RelOp rel = RelOp::eq;     // atom_rel
    bool expected = true;      // atom_bool: required value of the constant
    std::vector<GoalExpr> kids;

    static GoalExpr relation(int atom_index, RelOp op);
    static GoalExpr boolean(int atom_index, bool expected);
    static GoalExpr conj_of(std::vector<GoalExpr> kids);
    static GoalExpr disj_of(std::vector<GoalExpr> kids);
    static GoalExpr negation(GoalExpr kid);
};

// Rewrites to an equivalent expression with no neg nodes: De Morgan over
// conj/disj, relational operators flipped, boolean expectations inverted.
GoalExpr push_negation(const GoalExpr& e);

bool goal_expr_equal(const GoalExpr& a, const GoalExpr& b);

enum class GoalKind { decision, condition };

struct TestGoal {
    int id = -1;
    int node_id = -1;
    GoalKind kind = GoalKind::decision;
    bool polarity = true;  // required outcome of the source decision/condition
    GoalExpr expr;
    std::string text;
};

struct GoalSet {
    std::vector<TestGoal> goals;
    std::vector<std::vector<int>> by_node;  // node id -> goal ids

    int size() const { return static_cast<int>(goals.size()); }
};

// Expands a program into its condition/decision obligations: per decision
// node, the node condition and its complement plus both polarities of every
// atomic condition, with structurally identical goals merged.
GoalSet extract_goals(const ProgramModel& model);

// Lowers a decision's condition tree to a goal expression (atoms by index).
GoalExpr goal_expr_from_condition(const CondExpr& c);

std::string goal_expr_text(const GoalExpr& e, const DecisionNode& node);

}  // namespace walkgen
