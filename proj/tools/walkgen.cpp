#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "walkgen/benchmarks.hpp"
#include "walkgen/experiment.hpp"
#include "walkgen/parser.hpp"
#include "walkgen/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitParse = 2;

struct ProgramArg {
    std::string name;    // benchmark name or file stem
    std::string source;
};

// --program accepts a built-in benchmark name or a path to a .wt file.
bool load_program_arg(const std::string& arg, ProgramArg& out, std::string& err) {
    if (const walkgen::BenchmarkEntry* b = walkgen::find_benchmark(arg)) {
        out.name = b->name;
        out.source = b->source;
        return true;
    }
    std::filesystem::path path(arg);
    std::ifstream in(path);
    if (!in) {
        err = "unknown program '" + arg + "' (not a benchmark name or readable file)";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out.name = path.stem().string();
    out.source = ss.str();
    return true;
}

int run_command(const std::string& program_arg, const std::string& algo, int reps,
                const walkgen::SearchParams& params, const walkgen::FitnessConfig& fitness,
                const std::string& out_dir, const std::string& formats, int threads) {
    ProgramArg prog;
    std::string err;
    if (!load_program_arg(program_arg, prog, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitConfig;
    }

    bool want_json = formats.find("json") != std::string::npos;
    bool want_csv = formats.find("csv") != std::string::npos;
    if (!want_json && !want_csv) {
        std::cerr << "error: --format must include json and/or csv\n";
        return kExitConfig;
    }

    walkgen::ProgramModel model;
    try {
        model = walkgen::parse_program(prog.source);
    } catch (const walkgen::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    walkgen::GoalSet goals = walkgen::extract_goals(model);

    walkgen::ExperimentConfig cfg;
    cfg.program = prog.name;
    cfg.algorithm = algo;
    cfg.repetitions = reps;
    cfg.params = params;
    cfg.fitness = fitness;
    cfg.threads = threads;

    walkgen::ExperimentSummary summary = walkgen::run_experiment(model, goals, cfg);

    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << out_dir << "'\n";
        return kExitConfig;
    }

    for (const walkgen::SearchReport& r : summary.runs) {
        std::string stem = "run_" + std::to_string(r.params.seed);
        if (want_json) {
            std::ofstream f(dir / (stem + ".json"));
            f << walkgen::report_json_text(r, model);
        }
        if (want_csv) {
            std::ofstream f(dir / (stem + ".csv"));
            f << walkgen::timeline_csv(r);
        }
    }
    {
        std::ofstream f(dir / "summary.json");
        f << walkgen::summary_to_json(summary, cfg).dump(2) << "\n";
    }
    if (want_csv) {
        std::ofstream f(dir / "coverage_curve.csv");
        f << walkgen::merged_timeline_csv(summary);
    }

    std::cout << prog.name << " " << algo << " x" << reps << ": mean coverage "
              << summary.mean_coverage_pct << "%, full in " << summary.full_coverage_runs << "/"
              << reps << " runs, avg " << summary.avg_seconds << " s, avg "
              << summary.avg_evaluations << " evaluations\n"
              << "reports written to " << dir.string() << "\n";
    return kExitOk;
}

int goals_command(const std::string& program_arg) {
    ProgramArg prog;
    std::string err;
    if (!load_program_arg(program_arg, prog, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitConfig;
    }
    try {
        walkgen::ProgramModel model = walkgen::parse_program(prog.source);
        walkgen::GoalSet goals = walkgen::extract_goals(model);
        std::cout << walkgen::goals_to_json(goals).dump(2) << "\n";
    } catch (const walkgen::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

int parse_command(const std::string& program_arg) {
    ProgramArg prog;
    std::string err;
    if (!load_program_arg(program_arg, prog, err)) {
        std::cerr << "error: " << err << "\n";
        return kExitConfig;
    }
    try {
        walkgen::ProgramModel model = walkgen::parse_program(prog.source);
        walkgen::GoalSet goals = walkgen::extract_goals(model);
        std::cout << prog.name << ": " << model.variables.size() << " variables, "
                  << model.decision_count() << " decisions, " << goals.size() << " goals\n";
    } catch (const walkgen::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk test-case generation for condition/decision coverage"};
    app.require_subcommand(1);

    std::string program;
    std::string algo = "walktest";
    std::string combinator = "corrected";
    std::string out_dir = "out";
    std::string formats = "json,csv";
    int reps = 1;
    int threads = 0;
    walkgen::SearchParams params;
    walkgen::FitnessConfig fitness;

    CLI::App* run = app.add_subcommand("run", "run a search and write reports");
    run->add_option("--program", program, "benchmark name or .wt file")->required();
    run->add_option("--algo", algo, "walktest | random")
        ->check(CLI::IsMember({"walktest", "random"}));
    run->add_option("--reps", reps, "repetitions (seeds seed..seed+reps-1)");
    run->add_option("--seed", params.seed, "base RNG seed");
    run->add_option("--r", params.restarts, "restart bound");
    run->add_option("--t", params.seeding_runs, "random seeding evaluations per restart");
    run->add_option("--m1", params.walk_restarts, "walk pulls per invocation");
    run->add_option("--m2", params.walk_steps, "walk steps per pull");
    run->add_option("--q", params.pool_capacity, "pool capacity per goal");
    run->add_option("--p", params.walk_probability, "non-improving step probability")
        ->check(CLI::Range(0.0, 1.0));
    run->add_option("--k", fitness.k, "distance offset for unsatisfied atoms");
    run->add_option("--combinator", combinator, "corrected | paper")
        ->check(CLI::IsMember({"corrected", "paper"}));
    run->add_option("--loop-budget", params.loop_budget, "total loop iterations per execution");
    run->add_option("--random-cases", params.random_cases, "cases for --algo random");
    run->add_option("--threads", threads, "worker threads (0 = auto)");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--format", formats, "json,csv");

    std::string goals_program;
    CLI::App* goals_cmd = app.add_subcommand("goals", "list extracted goals as JSON");
    goals_cmd->add_option("--program", goals_program, "benchmark name or .wt file")->required();

    std::string parse_program_arg;
    CLI::App* parse_cmd = app.add_subcommand("parse", "validate a program");
    parse_cmd->add_option("--program", parse_program_arg, "benchmark name or .wt file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (run->parsed()) {
        if (reps < 1) {
            std::cerr << "error: --reps must be at least 1\n";
            return kExitConfig;
        }
        walkgen::combinator_from_name(combinator, fitness.combinator);
        return run_command(program, algo, reps, params, fitness, out_dir, formats, threads);
    }
    if (goals_cmd->parsed()) return goals_command(goals_program);
    if (parse_cmd->parsed()) return parse_command(parse_program_arg);
    return kExitConfig;
}
