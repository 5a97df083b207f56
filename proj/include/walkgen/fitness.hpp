#pragma once

#include <string>

#include "walkgen/goals.hpp"
#include "walkgen/interpreter.hpp"

namespace walkgen {

// How compound conditions fold their branch distances. The `corrected`
// assignment (and -> sum, or -> min) is the one under which a zero cost is
// equivalent to the compound being satisfied; `swapped` keeps the inverse
// assignment (and -> min, or -> sum) selectable for comparison runs.
enum class Combinator { corrected, swapped };

const char* combinator_name(Combinator c);
bool combinator_from_name(const std::string& name, Combinator& out);

struct FitnessConfig {
    double k = 1.0;  // minimal positive offset for unsatisfied atoms
    Combinator combinator = Combinator::corrected;
};

// Branch distance of a goal against one trace: zero iff satisfied at some
// reached occurrence (corrected mode); unreached goals carry no finite
// value and order above every reached cost.
struct Cost {
    double value = 0.0;
    bool reached = false;

    static Cost unreached() { return Cost{0.0, false}; }
    static Cost at(double v) { return Cost{v, true}; }

    bool is_zero() const { return reached && value == 0.0; }
    bool operator<(const Cost& o) const {
        if (reached != o.reached) return reached;  // any reached < unreached
        return value < o.value;
    }
    bool operator==(const Cost& o) const {
        return reached == o.reached && (!reached || value == o.value);
    }
};

// Distance of one atomic condition given its recorded operands. Satisfied
// atoms score exactly 0; unsatisfied atoms score at least K.
double atom_distance(const GoalExpr& atom, const AtomInfo& info, const AtomObs& obs,
                     const FitnessConfig& cfg);

enum class BoolOp { logic_and, logic_or };

double combine(BoolOp op, double left, double right, const FitnessConfig& cfg);

// Distance of a goal expression against a single decision occurrence.
double occurrence_distance(const GoalExpr& expr, const DecisionNode& node,
                           const AtomObs* atoms, const FitnessConfig& cfg);

// Minimum distance over all occurrences of the goal's node in the trace;
// unreached when the node never executed.
Cost goal_cost(const TestGoal& goal, const DecisionNode& node, const ExecutionTrace& trace,
               const FitnessConfig& cfg);

Cost goal_cost(const TestGoal& goal, const ProgramModel& model, const ExecutionTrace& trace,
               const FitnessConfig& cfg);

}  // namespace walkgen
