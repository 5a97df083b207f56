#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkgen/ast.hpp"

namespace walkgen {

// One test input: one value per declared variable in declaration order,
// each in the variable's own scaled units (int32 values as-is, fixed-real
// values multiplied by 10^decimals).
struct InputVector {
    std::vector<std::int64_t> values;

    bool operator==(const InputVector& o) const { return values == o.values; }
    bool operator<(const InputVector& o) const { return values < o.values; }
};

// Renders a single input value back to decimal text ("7", "-3.250").
std::string render_value(std::int64_t scaled, int decimals);
std::string render_input(const InputVector& v, const ProgramModel& m);

enum class TermStatus { normal, runtime_error, loop_budget_exceeded };

// Snapshot of one atomic condition at one decision occurrence. Relational
// atoms record both operands (runtime scale); boolean atoms record the
// value in lhs.
struct AtomObs {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct DecisionOccurrence {
    std::int32_t node = -1;
    bool outcome = false;
    std::uint32_t atoms_begin = 0;  // index into ExecutionTrace::atom_values
};

struct ExecutionTrace {
    std::vector<DecisionOccurrence> occurrences;  // execution order
    std::vector<AtomObs> atom_values;
    TermStatus status = TermStatus::normal;

    void clear() {
        occurrences.clear();
        atom_values.clear();
        status = TermStatus::normal;
    }
};

inline constexpr std::int64_t kDefaultLoopBudget = 1'000'000;

// Runs the program on one input. Deterministic; conditions are evaluated
// without short-circuit so every atom observation is recorded, while the
// decision outcome follows ordinary boolean semantics. Division or modulo
// by zero truncates the trace with runtime_error; loops abort once the
// total iteration count exceeds loop_budget.
ExecutionTrace execute(const ProgramModel& model, const InputVector& input,
                       std::int64_t loop_budget = kDefaultLoopBudget);

// Same, reusing the caller's trace buffers.
void execute_into(ExecutionTrace& trace, const ProgramModel& model,
                  const InputVector& input, std::int64_t loop_budget = kDefaultLoopBudget);

}  // namespace walkgen
