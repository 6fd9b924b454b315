#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpga/course_io.hpp"
#include "lpga/harness.hpp"
#include "lpga/oracle.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_data_error = 1;
constexpr int exit_usage_error = 2;

struct Options {
    std::string course_file;
    std::string rdm_file;
    std::string out_file;
    std::string path_arg;
    lpga::GaConfig config;
    int repeats = 1;
};

void add_input_options(CLI::App& cmd, Options& opt) {
    cmd.add_option("--course", opt.course_file, "Course CSV (id,title,difficulty,granularity,rating)")
        ->required();
    cmd.add_option("--rdm", opt.rdm_file, "Relation-degree matrix CSV (n x n)")->required();
}

void add_fitness_options(CLI::App& cmd, Options& opt) {
    cmd.add_option("--w", opt.config.fitness_params.w, "Objective weight in [0, 1]")
        ->capture_default_str();
    cmd.add_option_function<std::string>(
           "--variant",
           [&opt](const std::string& v) { opt.config.fitness_params.variant = lpga::parse_variant(v); },
           "Objective form")
        ->check(CLI::IsMember({"listing", "text"}))
        ->default_str("listing");
}

void add_ga_options(CLI::App& cmd, Options& opt) {
    lpga::GaConfig& c = opt.config;
    cmd.add_option("--pop-size", c.population_size, "Population size")->capture_default_str();
    cmd.add_option("--generations", c.generations, "Number of generations")->capture_default_str();
    cmd.add_option("--tournament-size", c.tournament_size, "Tournament size k")
        ->capture_default_str();
    cmd.add_option("--crossover-rate", c.crossover_rate, "Crossover probability")
        ->capture_default_str();
    cmd.add_option("--mutation-rate", c.mutation_rate, "Swap-mutation probability")
        ->capture_default_str();
    cmd.add_option("--elitism", c.elitism_count, "Individuals carried over unchanged")
        ->capture_default_str();
    cmd.add_option("--seed", c.rng_seed, "RNG seed")->capture_default_str();
    cmd.add_option("--hc-iterations", c.hc_iterations, "Hill-climbing proposals per seed")
        ->capture_default_str();
    cmd.add_option("--sa-t0", c.sa_schedule.initial_temperature, "SA initial temperature")
        ->capture_default_str();
    cmd.add_option("--sa-cooling", c.sa_schedule.cooling_factor, "SA geometric cooling factor")
        ->capture_default_str();
    cmd.add_option("--sa-steps", c.sa_schedule.steps_per_seed, "SA proposals per seed")
        ->capture_default_str();
    add_fitness_options(cmd, opt);
}

void add_policy_options(CLI::App& cmd, Options& opt) {
    cmd.add_option_function<std::string>(
           "--selection",
           [&opt](const std::string& v) { opt.config.selection = lpga::parse_selection(v); },
           "Parent selection")
        ->check(CLI::IsMember({"tournament", "roulette"}))
        ->default_str("tournament");
    cmd.add_option_function<std::string>(
           "--init", [&opt](const std::string& v) { opt.config.init = lpga::parse_init(v); },
           "Population seeding")
        ->check(CLI::IsMember({"random", "hc", "sa"}))
        ->default_str("random");
    cmd.add_option_function<std::string>(
           "--crossover",
           [&opt](const std::string& v) { opt.config.crossover = lpga::parse_crossover(v); },
           "Recombination operator")
        ->check(CLI::IsMember({"pmx", "cycle"}))
        ->default_str("pmx");
}

lpga::Course load_or_die(const Options& opt) {
    std::vector<std::string> warnings;
    lpga::Course course = lpga::load_course(opt.course_file, opt.rdm_file, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return course;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

int cmd_run(const Options& opt) {
    lpga::Course course = load_or_die(opt);
    lpga::RunResult result = lpga::run_single(course, opt.config);

    std::filesystem::path json_path = opt.out_file.empty() ? "run_result.json" : opt.out_file;
    std::filesystem::path csv_path = json_path;
    csv_path.replace_extension(".convergence.csv");
    write_file(json_path, lpga::run_result_json(result, opt.config, opt.course_file, opt.rdm_file));
    write_file(csv_path, lpga::convergence_csv(result));

    std::cout << "first fitness: " << fixed2(lpga::FitnessScore::round_reported(result.first_fitness))
              << "\n"
              << "last fitness:  " << fixed2(lpga::FitnessScore::round_reported(result.last_fitness))
              << "\n"
              << "best fitness:  " << fixed2(result.best_fitness.reported) << "\n"
              << "best path:     " << lpga::format_path(result.best_path) << "\n"
              << "wrote " << json_path.string() << " and " << csv_path.string() << "\n";
    return exit_ok;
}

int cmd_matrix(const Options& opt) {
    lpga::Course course = load_or_die(opt);
    lpga::MatrixReport report = lpga::run_matrix(course, opt.config, opt.repeats);

    std::filesystem::path csv_path = opt.out_file.empty() ? "matrix.csv" : opt.out_file;
    write_file(csv_path, lpga::matrix_csv(report));

    std::printf("%-12s %-8s %-9s %11s %11s %9s\n", "selection", "init", "crossover", "mean_first",
                "mean_last", "best");
    for (const lpga::MatrixCellSummary& row : report.rows) {
        std::string last = fixed2(row.mean_last_fitness);
        if (opt.repeats > 1) last += " +/- " + fixed2(row.stddev_last_fitness);
        std::printf("%-12s %-8s %-9s %11s %11s %9s\n", lpga::to_string(row.selection).c_str(),
                    lpga::to_string(row.init).c_str(), lpga::to_string(row.crossover).c_str(),
                    fixed2(row.mean_first_fitness).c_str(), last.c_str(),
                    fixed2(row.best_fitness).c_str());
    }
    std::printf("wrote %s (%zu runs)\n", csv_path.string().c_str(), report.runs.size());
    return exit_ok;
}

lpga::LearningPath parse_path_arg(const std::string& arg) {
    lpga::LearningPath path;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int id = std::stoi(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw std::invalid_argument("trailing characters in '" + token + "'");
        path.push_back(id);
    }
    return path;
}

int cmd_evaluate(const Options& opt) {
    lpga::Course course = load_or_die(opt);
    lpga::LearningPath path;
    try {
        path = parse_path_arg(opt.path_arg);
        lpga::require_permutation(path, course.size());
    } catch (const std::exception& e) {
        std::cerr << "error: invalid --path: " << e.what() << "\n";
        return exit_data_error;
    }

    lpga::FitnessParams params = opt.config.fitness_params;
    params.variant = lpga::FitnessVariant::Listing;
    lpga::FitnessScore listing = lpga::evaluate(path, course, params);
    params.variant = lpga::FitnessVariant::Text;
    lpga::FitnessScore text = lpga::evaluate(path, course, params);
    std::cout << "listing: " << fixed2(listing.reported) << "\n"
              << "text:    " << fixed2(text.reported) << "\n";
    return exit_ok;
}

int cmd_oracle(const Options& opt) {
    lpga::Course course = load_or_die(opt);
    lpga::OracleResult result = lpga::exhaustive_best(course, opt.config.fitness_params);
    std::cout << "best path:    " << lpga::format_path(result.best_path) << "\n"
              << "best fitness: " << fixed2(lpga::FitnessScore::round_reported(result.best_fitness))
              << "\n"
              << "evaluated:    " << result.evaluated_count << " permutations\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learning-path optimization over course concepts"};
    app.require_subcommand(1);

    Options run_opt, matrix_opt, eval_opt, oracle_opt;

    CLI::App* run = app.add_subcommand("run", "One GA run; writes a JSON result and a convergence CSV");
    add_input_options(*run, run_opt);
    add_policy_options(*run, run_opt);
    add_ga_options(*run, run_opt);
    run->add_option("--out", run_opt.out_file, "Result JSON path")->default_str("run_result.json");

    CLI::App* matrix = app.add_subcommand(
        "matrix", "All 12 selection x init x crossover cells; writes a per-run CSV");
    add_input_options(*matrix, matrix_opt);
    add_ga_options(*matrix, matrix_opt);
    matrix->add_option("--repeats", matrix_opt.repeats, "Runs per cell (seed, seed+1, ...)")
        ->capture_default_str();
    matrix->add_option("--out", matrix_opt.out_file, "Per-run CSV path")->default_str("matrix.csv");

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score one explicit path under both objective forms");
    add_input_options(*evaluate, eval_opt);
    evaluate->add_option("--path", eval_opt.path_arg, "Comma-separated concept ids, e.g. 0,2,1")
        ->required();
    evaluate->add_option("--w", eval_opt.config.fitness_params.w, "Objective weight in [0, 1]")
        ->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive best path (courses of up to 10 concepts)");
    add_input_options(*oracle, oracle_opt);
    add_fitness_options(*oracle, oracle_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage_error;
    }

    try {
        if (run->parsed()) {
            lpga::validate(run_opt.config);
            return cmd_run(run_opt);
        }
        if (matrix->parsed()) {
            lpga::validate(matrix_opt.config);
            if (matrix_opt.repeats < 1) throw std::invalid_argument("--repeats must be >= 1");
            return cmd_matrix(matrix_opt);
        }
        if (evaluate->parsed()) return cmd_evaluate(eval_opt);
        if (oracle->parsed()) return cmd_oracle(oracle_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        // Bad configuration values are usage errors; bad input data is not.
        if (run->parsed() || matrix->parsed()) return exit_usage_error;
        return exit_data_error;
    } catch (const lpga::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data_error;
    }
    return exit_usage_error;
}
