#include "walkgen/interpreter.hpp"

namespace walkgen {

namespace {

std::int64_t pow10_i64(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 10;
    return v;
}

struct Fault {};        // division/modulo by zero
struct BudgetBlown {};  // total loop iterations exceeded the budget

// Arithmetic wraps in 64 bits (two's complement); fixed-real * and / go
// through 128-bit intermediates so in-range values stay exact.
std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

class Machine {
public:
    Machine(const ProgramModel& model, ExecutionTrace& trace, std::int64_t loop_budget)
        : model_(model),
          trace_(trace),
          budget_(loop_budget),
          real_scale_(pow10_i64(model.real_scale_decimals)) {}

    void run(const InputVector& input) {
        env_.assign(model_.symbols.size(), 0);
        for (std::size_t i = 0; i < model_.symbols.size(); ++i) {
            const Symbol& s = model_.symbols[i];
            if (!s.is_input) continue;
            std::int64_t v = input.values[static_cast<std::size_t>(s.input_index)];
            const VariableDomain& dom = model_.variables[static_cast<std::size_t>(s.input_index)];
            if (dom.kind == ValueKind::fixed_real && dom.decimals < model_.real_scale_decimals)
                v *= pow10_i64(model_.real_scale_decimals - dom.decimals);
            env_[i] = v;
        }
        try {
            exec(*model_.body);
            trace_.status = TermStatus::normal;
        } catch (const Fault&) {
            trace_.status = TermStatus::runtime_error;
        } catch (const BudgetBlown&) {
            trace_.status = TermStatus::loop_budget_exceeded;
        }
    }

private:
    void exec(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::block:
                for (const auto& k : s.stmts) exec(*k);
                return;
            case Stmt::Kind::assign:
                env_[static_cast<std::size_t>(s.symbol)] = eval(*s.expr);
                return;
            case Stmt::Kind::target:
                return;
            case Stmt::Kind::if_stmt: {
                if (decide(*s.decision)) {
                    exec(*s.then_branch);
                } else if (s.else_branch) {
                    exec(*s.else_branch);
                }
                return;
            }
            case Stmt::Kind::while_stmt: {
                while (decide(*s.decision)) {
                    if (++iterations_ > budget_) throw BudgetBlown{};
                    exec(*s.loop_body);
                }
                return;
            }
        }
    }

    // Evaluates a decision, recording every atom observation. The occurrence
    // is committed only after all operands evaluate, so a fault inside a
    // condition leaves the trace truncated before it.
    bool decide(const DecisionNode& node) {
        scratch_.clear();
        scratch_.resize(node.atoms.size());
        bool outcome = eval_cond(*node.condition);
        DecisionOccurrence occ;
        occ.node = node.id;
        occ.outcome = outcome;
        occ.atoms_begin = static_cast<std::uint32_t>(trace_.atom_values.size());
        trace_.atom_values.insert(trace_.atom_values.end(), scratch_.begin(), scratch_.end());
        trace_.occurrences.push_back(occ);
        return outcome;
    }

    bool eval_cond(const CondExpr& c) {
        switch (c.kind) {
            case CondExpr::Kind::relation: {
                std::int64_t a = eval(*c.lhs);
                std::int64_t b = eval(*c.rhs);
                scratch_[static_cast<std::size_t>(c.atom_index)] = AtomObs{a, b};
                switch (c.rel) {
                    case RelOp::eq: return a == b;
                    case RelOp::ne: return a != b;
                    case RelOp::lt: return a < b;
                    case RelOp::le: return a <= b;
                    case RelOp::gt: return a > b;
                    case RelOp::ge: return a >= b;
                }
                return false;
            }
            case CondExpr::Kind::bool_const:
                scratch_[static_cast<std::size_t>(c.atom_index)] =
                    AtomObs{c.bool_value ? 1 : 0, 0};
                return c.bool_value;
            case CondExpr::Kind::logic_and: {
                // No short-circuit: both sides always evaluate.
                bool l = eval_cond(*c.kids[0]);
                bool r = eval_cond(*c.kids[1]);
                return l && r;
            }
            case CondExpr::Kind::logic_or: {
                bool l = eval_cond(*c.kids[0]);
                bool r = eval_cond(*c.kids[1]);
                return l || r;
            }
            case CondExpr::Kind::logic_not:
                return !eval_cond(*c.kids[0]);
        }
        return false;
    }

    std::int64_t eval(const ArithExpr& e) {
        switch (e.kind) {
            case ArithExpr::Kind::constant:
                return e.value;
            case ArithExpr::Kind::variable:
                return env_[static_cast<std::size_t>(e.symbol)];
            case ArithExpr::Kind::negate:
                return wrap_sub(0, eval(*e.lhs));
            case ArithExpr::Kind::binary: {
                std::int64_t a = eval(*e.lhs);
                std::int64_t b = eval(*e.rhs);
                std::int64_t scale = e.real_scaled ? real_scale_ : 1;
                switch (e.op) {
                    case ArithOp::add: return wrap_add(a, b);
                    case ArithOp::sub: return wrap_sub(a, b);
                    case ArithOp::mul: {
                        __int128 p = static_cast<__int128>(a) * b;
                        if (scale != 1) p /= scale;
                        return static_cast<std::int64_t>(p);
                    }
                    case ArithOp::div: {
                        if (b == 0) throw Fault{};
                        __int128 n = static_cast<__int128>(a);
                        if (scale != 1) n *= scale;
                        return static_cast<std::int64_t>(n / b);
                    }
                    case ArithOp::mod: {
                        if (b == 0) throw Fault{};
                        if (a == INT64_MIN && b == -1) return 0;
                        return a % b;
                    }
                }
                return 0;
            }
        }
        return 0;
    }

    const ProgramModel& model_;
    ExecutionTrace& trace_;
    std::int64_t budget_;
    std::int64_t iterations_ = 0;
    std::int64_t real_scale_;
    std::vector<std::int64_t> env_;
    std::vector<AtomObs> scratch_;
};

}  // namespace

void execute_into(ExecutionTrace& trace, const ProgramModel& model,
                  const InputVector& input, std::int64_t loop_budget) {
    trace.clear();
    Machine m(model, trace, loop_budget);
    m.run(input);
}

ExecutionTrace execute(const ProgramModel& model, const InputVector& input,
                       std::int64_t loop_budget) {
    ExecutionTrace t;
    execute_into(t, model, input, loop_budget);
    return t;
}

std::string render_value(std::int64_t scaled, int decimals) {
    if (decimals == 0) return std::to_string(scaled);
    std::int64_t scale = pow10_i64(decimals);
    bool neg = scaled < 0;
    std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(scaled)
                            : static_cast<std::uint64_t>(scaled);
    std::uint64_t whole = mag / static_cast<std::uint64_t>(scale);
    std::uint64_t frac = mag % static_cast<std::uint64_t>(scale);
    std::string f = std::to_string(frac);
    f.insert(f.begin(), static_cast<std::size_t>(decimals) - f.size(), '0');
    return (neg ? "-" : "") + std::to_string(whole) + "." + f;
}

std::string render_input(const InputVector& v, const ProgramModel& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.values.size(); ++i) {
        if (i) out += ", ";
        out += render_value(v.values[i], m.variables[i].decimals);
    }
    return out + ")";
}

}  // namespace walkgen
