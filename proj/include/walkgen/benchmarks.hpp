#pragma once

#include <string>
#include <vector>

#include "walkgen/ast.hpp"

namespace walkgen {

struct BenchmarkEntry {
    std::string name;
    std::string title;
    std::string source;
    int decisions = 0;       // decision-node count the source parses to
    int goals = 0;           // extracted goal count
    int hard_goal_node = -1; // decision whose TRUE outcome random testing
                             // cannot realistically hit (-1 when none)
};

const std::vector<BenchmarkEntry>& builtin_benchmarks();
const BenchmarkEntry* find_benchmark(const std::string& name);

}  // namespace walkgen
