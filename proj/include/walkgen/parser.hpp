#pragma once

#include <stdexcept>
#include <string>

#include "walkgen/ast.hpp"

namespace walkgen {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& message);
};

// Parses DSL source text into a program model. Decision nodes are numbered
// in source order starting at 0. Throws ParseError on syntax errors,
// undeclared variables and int/real type mixing.
ProgramModel parse_program(const std::string& source);

}  // namespace walkgen
