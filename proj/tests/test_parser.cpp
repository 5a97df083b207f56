#include <doctest.h>

#include "walkgen/benchmarks.hpp"
#include "walkgen/parser.hpp"

using namespace walkgen;

namespace {
const char* kGuardFragment =
    "var A: int32;\n"
    "var B: int32;\n"
    "var C: int32;\n"
    "if (A > 0 && B > 0 && C > 0) { target 1; } else { target 2; }\n";
}

TEST_CASE("three-way conjunction parses to one decision with three atoms") {
    ProgramModel m = parse_program(kGuardFragment);
    REQUIRE(m.decision_count() == 1);
    const DecisionNode& node = *m.decisions[0];
    CHECK(node.id == 0);
    CHECK(node.atoms.size() == 3);
    // (A > 0 && B > 0) && C > 0: two nested conjunctions
    REQUIRE(node.condition->kind == CondExpr::Kind::logic_and);
    CHECK(node.condition->kids[0]->kind == CondExpr::Kind::logic_and);
    CHECK(node.condition->kids[1]->kind == CondExpr::Kind::relation);
    CHECK(node.atoms[0].lhs_text == "A");
    CHECK(node.atoms[2].lhs_text == "C");
    CHECK(node.atoms[0].op == RelOp::gt);
}

TEST_CASE("program without variables is rejected") {
    CHECK_THROWS_WITH_AS(parse_program("x = 1;\n"), doctest::Contains("no input variables"),
                         ParseError);
}

TEST_CASE("decision nodes are numbered in source order from zero") {
    ProgramModel m = parse_program(
        "var x: int32;\n"
        "if (x > 0) { if (x > 10) { target a; } }\n"
        "while (x < 5) { x = x + 1; }\n");
    REQUIRE(m.decision_count() == 3);
    CHECK(m.decisions[0]->id == 0);
    CHECK(m.decisions[1]->id == 1);
    CHECK(m.decisions[2]->id == 2);
}

TEST_CASE("builtin triangle program has six decisions") {
    ProgramModel m = parse_program(find_benchmark("tri-int")->source);
    CHECK(m.decision_count() == 6);
    CHECK(m.variables.size() == 3);
    CHECK(m.variables[0].kind == ValueKind::int32);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_program("var x: int32;\nx = ;\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 5);
    }
}

TEST_CASE("undeclared variable is rejected") {
    CHECK_THROWS_WITH_AS(parse_program("var x: int32;\ny = z + 1;\n"),
                         doctest::Contains("undeclared variable 'z'"), ParseError);
}

TEST_CASE("int and real cannot mix in one expression") {
    const char* src =
        "var i: int32;\n"
        "var r: real(0, 10, 2);\n"
        "if (i > r) { target t; }\n";
    CHECK_THROWS_WITH_AS(parse_program(src), doctest::Contains("type mismatch"), ParseError);
}

TEST_CASE("modulo requires integers") {
    CHECK_THROWS_AS(parse_program("var r: real(0, 10, 2);\nx = r % 2;\n"), ParseError);
}

TEST_CASE("real domain constraints") {
    CHECK_THROWS_AS(parse_program("var r: real(5, 5, 2);\nx = r;\n"), ParseError);  // min < max
    CHECK_THROWS_AS(parse_program("var r: real(0, 1, 12);\nx = r;\n"), ParseError); // decimals <= 9
    CHECK_THROWS_AS(parse_program("var r: real(0, 1, 1);\nif (r > 0.25) { target t; }\n"),
                    ParseError);  // literal finer than declared precision
}

TEST_CASE("assignment inside a condition is a syntax error") {
    CHECK_THROWS_AS(parse_program("var x: int32;\nif (x = 1) { target t; }\n"), ParseError);
}

TEST_CASE("boolean value cannot be assigned") {
    CHECK_THROWS_AS(parse_program("var x: int32;\ny = (x > 0);\n"), ParseError);
}

TEST_CASE("braceless if bodies and comments parse") {
    ProgramModel m = parse_program(
        "# classifier\n"
        "var x: int32;\n"
        "if (x > 0)\n"
        "  target pos;  # trailing comment\n"
        "else\n"
        "  target nonpos;\n");
    CHECK(m.decision_count() == 1);
}

TEST_CASE("negation and boolean constants in conditions") {
    ProgramModel m = parse_program(
        "var x: int32;\n"
        "if (!(x < 3) && true) { target t; }\n");
    const DecisionNode& node = *m.decisions[0];
    REQUIRE(node.atoms.size() == 2);
    CHECK_FALSE(node.atoms[0].is_bool);
    CHECK(node.atoms[1].is_bool);
    CHECK(node.atoms[1].bool_value);
}

TEST_CASE("locals are introduced by assignment and typed by first use") {
    ProgramModel m = parse_program(
        "var r: real(0, 10, 1);\n"
        "t = r;\n"
        "flag = 0;\n"
        "if (t > 5.5 && flag == 0) { target t; }\n");
    CHECK(m.symbols.size() == 3);
    CHECK(m.symbols[1].is_real);
    CHECK_FALSE(m.symbols[2].is_real);
    // flag stays integer; assigning a real into it is a type error
    CHECK_THROWS_AS(parse_program("var r: real(0, 10, 1);\nflag = 0;\nflag = r;\n"), ParseError);
}

TEST_CASE("duplicate variable declarations are rejected") {
    CHECK_THROWS_AS(parse_program("var x: int32;\nvar x: int32;\ny = x;\n"), ParseError);
}

TEST_CASE("fixed-real bounds are scaled exactly") {
    ProgramModel m = parse_program("var r: real(-100000, 100000, 3);\nx = r;\n");
    CHECK(m.variables[0].min_scaled == -100000000);
    CHECK(m.variables[0].max_scaled == 100000000);
    CHECK(m.variables[0].decimals == 3);
    CHECK(m.real_scale_decimals == 3);
}
