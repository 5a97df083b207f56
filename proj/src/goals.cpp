#include "walkgen/goals.hpp"

namespace walkgen {

GoalExpr GoalExpr::relation(int atom_index, RelOp op) {
    GoalExpr e;
    e.kind = Kind::atom_rel;
    e.atom_index = atom_index;
    e.rel = op;
    return e;
}

GoalExpr GoalExpr::boolean(int atom_index, bool expected) {
    GoalExpr e;
    e.kind = Kind::atom_bool;
    e.atom_index = atom_index;
    e.expected = expected;
    return e;
}

GoalExpr GoalExpr::conj_of(std::vector<GoalExpr> kids) {
    GoalExpr e;
    e.kind = Kind::conj;
    e.kids = std::move(kids);
    return e;
}

GoalExpr GoalExpr::disj_of(std::vector<GoalExpr> kids) {
    GoalExpr e;
    e.kind = Kind::disj;
    e.kids = std::move(kids);
    return e;
}

GoalExpr GoalExpr::negation(GoalExpr kid) {
    GoalExpr e;
    e.kind = Kind::neg;
    e.kids.push_back(std::move(kid));
    return e;
}

namespace {

GoalExpr push(const GoalExpr& e, bool negate) {
    switch (e.kind) {
        case GoalExpr::Kind::atom_rel:
            return GoalExpr::relation(e.atom_index, negate ? negate_rel(e.rel) : e.rel);
        case GoalExpr::Kind::atom_bool:
            return GoalExpr::boolean(e.atom_index, negate ? !e.expected : e.expected);
        case GoalExpr::Kind::neg:
            return push(e.kids[0], !negate);
        case GoalExpr::Kind::conj:
        case GoalExpr::Kind::disj: {
            bool is_conj = e.kind == GoalExpr::Kind::conj;
            if (negate) is_conj = !is_conj;
            std::vector<GoalExpr> kids;
            kids.reserve(e.kids.size());
            for (const auto& k : e.kids) kids.push_back(push(k, negate));
            return is_conj ? GoalExpr::conj_of(std::move(kids))
                           : GoalExpr::disj_of(std::move(kids));
        }
    }
    return e;
}

}  // namespace

GoalExpr push_negation(const GoalExpr& e) { return push(e, false); }

bool goal_expr_equal(const GoalExpr& a, const GoalExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case GoalExpr::Kind::atom_rel:
            return a.atom_index == b.atom_index && a.rel == b.rel;
        case GoalExpr::Kind::atom_bool:
            return a.atom_index == b.atom_index && a.expected == b.expected;
        default:
            if (a.kids.size() != b.kids.size()) return false;
            for (std::size_t i = 0; i < a.kids.size(); ++i)
                if (!goal_expr_equal(a.kids[i], b.kids[i])) return false;
            return true;
    }
}

GoalExpr goal_expr_from_condition(const CondExpr& c) {
    switch (c.kind) {
        case CondExpr::Kind::relation:
            return GoalExpr::relation(c.atom_index, c.rel);
        case CondExpr::Kind::bool_const:
            return GoalExpr::boolean(c.atom_index, true);
        case CondExpr::Kind::logic_not:
            return GoalExpr::negation(goal_expr_from_condition(*c.kids[0]));
        case CondExpr::Kind::logic_and:
        case CondExpr::Kind::logic_or: {
            std::vector<GoalExpr> kids;
            kids.reserve(c.kids.size());
            for (const auto& k : c.kids) kids.push_back(goal_expr_from_condition(*k));
            return c.kind == CondExpr::Kind::logic_and ? GoalExpr::conj_of(std::move(kids))
                                                       : GoalExpr::disj_of(std::move(kids));
        }
    }
    return GoalExpr{};
}

std::string goal_expr_text(const GoalExpr& e, const DecisionNode& node) {
    switch (e.kind) {
        case GoalExpr::Kind::atom_rel: {
            const AtomInfo& a = node.atoms[static_cast<std::size_t>(e.atom_index)];
            return a.lhs_text + " " + rel_op_text(e.rel) + " " + a.rhs_text;
        }
        case GoalExpr::Kind::atom_bool: {
            const AtomInfo& a = node.atoms[static_cast<std::size_t>(e.atom_index)];
            bool shown = e.expected ? a.bool_value : !a.bool_value;
            return shown ? "true" : "false";
        }
        case GoalExpr::Kind::neg:
            return "!(" + goal_expr_text(e.kids[0], node) + ")";
        case GoalExpr::Kind::conj:
        case GoalExpr::Kind::disj: {
            const char* op = e.kind == GoalExpr::Kind::conj ? " && " : " || ";
            std::string out = "(";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += op;
                out += goal_expr_text(e.kids[i], node);
            }
            return out + ")";
        }
    }
    return "?";
}

namespace {

void collect_atoms(const GoalExpr& e, std::vector<GoalExpr>& out) {
    switch (e.kind) {
        case GoalExpr::Kind::atom_rel:
        case GoalExpr::Kind::atom_bool:
            out.push_back(e);
            return;
        default:
            for (const auto& k : e.kids) collect_atoms(k, out);
    }
}

GoalExpr negate_atom(const GoalExpr& a) {
    if (a.kind == GoalExpr::Kind::atom_rel)
        return GoalExpr::relation(a.atom_index, negate_rel(a.rel));
    return GoalExpr::boolean(a.atom_index, !a.expected);
}

}  // namespace

GoalSet extract_goals(const ProgramModel& model) {
    GoalSet set;
    set.by_node.resize(model.decisions.size());
    for (const DecisionNode* node : model.decisions) {
        GoalExpr base = push_negation(goal_expr_from_condition(*node->condition));
        GoalExpr complement = push_negation(GoalExpr::negation(base));

        struct Candidate {
            GoalKind kind;
            bool polarity;
            GoalExpr expr;
        };
        std::vector<Candidate> cands;
        cands.push_back({GoalKind::decision, true, base});
        cands.push_back({GoalKind::decision, false, complement});
        std::vector<GoalExpr> atoms;
        collect_atoms(base, atoms);
        for (const auto& a : atoms) {
            cands.push_back({GoalKind::condition, true, a});
            cands.push_back({GoalKind::condition, false, negate_atom(a)});
        }

        // Dedup by rendered structure, so repeated atoms merge even when
        // they sit in distinct observation slots.
        for (auto& c : cands) {
            std::string text = goal_expr_text(c.expr, *node);
            bool duplicate = false;
            for (int gid : set.by_node[static_cast<std::size_t>(node->id)]) {
                if (set.goals[static_cast<std::size_t>(gid)].text == text) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            TestGoal g;
            g.id = static_cast<int>(set.goals.size());
            g.node_id = node->id;
            g.kind = c.kind;
            g.polarity = c.polarity;
            g.text = std::move(text);
            g.expr = std::move(c.expr);
            set.by_node[static_cast<std::size_t>(node->id)].push_back(g.id);
            set.goals.push_back(std::move(g));
        }
    }
    return set;
}

}  // namespace walkgen
