#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace walkgen {

// Input variables are either 32-bit integers or fixed-point reals with a
// declared range and a fixed number of digits after the point. Fixed-point
// values are stored as scaled integers (value * 10^decimals) so that
// encoding, comparison and equality stay exact.
enum class ValueKind { int32, fixed_real };

struct VariableDomain {
    std::string name;
    ValueKind kind = ValueKind::int32;
    // Bounds in the variable's own scaled units. For int32 these are fixed
    // to [-2^31, 2^31-1] with decimals == 0.
    std::int64_t min_scaled = 0;
    std::int64_t max_scaled = 0;
    int decimals = 0;

    std::int64_t lo() const { return min_scaled; }
    std::int64_t hi() const { return max_scaled; }
    std::uint64_t span() const {
        return static_cast<std::uint64_t>(max_scaled) - static_cast<std::uint64_t>(min_scaled);
    }

    static VariableDomain make_int32(std::string name);
    static VariableDomain make_real(std::string name, std::int64_t min_scaled,
                                    std::int64_t max_scaled, int decimals);
};

enum class ArithOp { add, sub, mul, div, mod };
enum class RelOp { eq, ne, lt, le, gt, ge };

const char* rel_op_text(RelOp op);
RelOp negate_rel(RelOp op);

// Arithmetic expression over the program's symbols. Constants are stored
// already scaled to the program's runtime scale for reals.
struct ArithExpr {
    enum class Kind { constant, variable, negate, binary };
    Kind kind = Kind::constant;
    std::int64_t value = 0;                 // constant
    int symbol = -1;                        // variable
    ArithOp op = ArithOp::add;              // binary
    bool real_scaled = false;               // binary: operands carry the runtime real scale
    std::unique_ptr<ArithExpr> lhs, rhs;    // binary; negate uses lhs only
};

// One atomic condition of a decision: a relational comparison or a boolean
// constant. Atoms never contain &&, || or ! below them.
struct AtomInfo {
    bool is_bool = false;
    bool bool_value = false;   // when is_bool
    RelOp op = RelOp::eq;      // when relational
    int scale_decimals = 0;    // 0 for int operands, runtime scale for reals
    std::string lhs_text, rhs_text;
};

// Boolean condition tree of an if/while. Atom leaves carry the index of
// their observation slot in execution traces.
struct CondExpr {
    enum class Kind { relation, bool_const, logic_and, logic_or, logic_not };
    Kind kind = Kind::bool_const;
    int atom_index = -1;                    // relation / bool_const
    RelOp rel = RelOp::eq;                  // relation
    std::unique_ptr<ArithExpr> lhs, rhs;    // relation operands
    bool bool_value = false;                // bool_const
    std::vector<std::unique_ptr<CondExpr>> kids;  // logic nodes
};

struct SourcePos {
    int line = 0;
    int column = 0;
};

struct DecisionNode {
    int id = -1;
    std::unique_ptr<CondExpr> condition;
    std::vector<AtomInfo> atoms;   // indexed by atom_index
    SourcePos pos;
};

struct Stmt {
    enum class Kind { assign, if_stmt, while_stmt, target, block };
    Kind kind = Kind::block;
    int symbol = -1;                          // assign target
    std::unique_ptr<ArithExpr> expr;          // assign rhs
    std::unique_ptr<DecisionNode> decision;   // if / while
    std::unique_ptr<Stmt> then_branch;        // if
    std::unique_ptr<Stmt> else_branch;        // if (may be null)
    std::unique_ptr<Stmt> loop_body;          // while
    std::string label;                        // target
    std::vector<std::unique_ptr<Stmt>> stmts; // block
    SourcePos pos;
};

// Symbols are the declared input variables followed by locals introduced by
// assignment. Locals are zero-initialised and typed by their first use.
struct Symbol {
    std::string name;
    bool is_real = false;
    bool is_input = false;
    int input_index = -1;
};

// Immutable after parsing; safe to share between concurrent searches.
struct ProgramModel {
    std::vector<VariableDomain> variables;        // declaration order
    std::vector<Symbol> symbols;                  // inputs first
    std::unique_ptr<Stmt> body;
    std::vector<const DecisionNode*> decisions;   // source order, ids 0..n-1
    int real_scale_decimals = 0;                  // runtime scale for reals

    int decision_count() const { return static_cast<int>(decisions.size()); }
};

}  // namespace walkgen
