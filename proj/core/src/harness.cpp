#include "lpga/harness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lpga/rng.hpp"

namespace lpga {
namespace {

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string format_general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

RunResult run_single(const Course& course, const GaConfig& config) {
    validate(config);
    Rng seeding_rng = make_rng(config.rng_seed, RngStream::Seeding);
    std::vector<Individual> population = seed_population(course, config, seeding_rng);
    return evolve(course, config, std::move(population));
}

MatrixReport run_matrix(const Course& course, const GaConfig& base, int repeats) {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    validate(base);

    constexpr SelectionPolicy selections[] = {SelectionPolicy::Tournament,
                                              SelectionPolicy::Roulette};
    constexpr InitApproach inits[] = {InitApproach::Random, InitApproach::HillClimbing,
                                      InitApproach::SimulatedAnnealing};
    constexpr CrossoverKind crossovers[] = {CrossoverKind::Pmx, CrossoverKind::Cycle};

    MatrixReport report;
    report.runs.reserve(static_cast<std::size_t>(12) * repeats);
    report.rows.reserve(12);

    for (SelectionPolicy selection : selections) {
        for (InitApproach init : inits) {
            for (CrossoverKind crossover : crossovers) {
                MatrixCellSummary row;
                row.selection = selection;
                row.init = init;
                row.crossover = crossover;

                double sum_first = 0.0;
                double sum_last = 0.0;
                double sum_last_sq = 0.0;
                bool have_best = false;

                for (int r = 0; r < repeats; ++r) {
                    GaConfig config = base;
                    config.selection = selection;
                    config.init = init;
                    config.crossover = crossover;
                    config.rng_seed = base.rng_seed + static_cast<std::uint64_t>(r);

                    MatrixRun run;
                    run.selection = selection;
                    run.init = init;
                    run.crossover = crossover;
                    run.seed = config.rng_seed;
                    run.result = run_single(course, config);

                    sum_first += run.result.first_fitness;
                    sum_last += run.result.last_fitness;
                    sum_last_sq += run.result.last_fitness * run.result.last_fitness;
                    if (!have_best || run.result.best_fitness.value > row.best_fitness) {
                        row.best_fitness = run.result.best_fitness.value;
                        row.best_path = run.result.best_path;
                        have_best = true;
                    }
                    report.runs.push_back(std::move(run));
                }

                row.mean_first_fitness = sum_first / repeats;
                row.mean_last_fitness = sum_last / repeats;
                if (repeats > 1) {
                    double variance = (sum_last_sq - sum_last * sum_last / repeats) / (repeats - 1);
                    row.stddev_last_fitness = variance > 0.0 ? std::sqrt(variance) : 0.0;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::string format_path(const LearningPath& path) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) out << ", ";
        out << path[i];
    }
    out << ']';
    return out.str();
}

std::string convergence_csv(const RunResult& result) {
    std::ostringstream out;
    out << "generation,best_fitness,mean_fitness\n";
    for (const GenerationStats& g : result.convergence) {
        out << g.generation << ',' << format_general(g.best_fitness) << ','
            << format_general(g.mean_fitness) << '\n';
    }
    return out.str();
}

std::string matrix_csv(const MatrixReport& report) {
    std::ostringstream out;
    out << "selection,init,crossover,seed,first_fitness,last_fitness,best_path\n";
    for (const MatrixRun& run : report.runs) {
        out << to_string(run.selection) << ',' << to_string(run.init) << ','
            << to_string(run.crossover) << ',' << run.seed << ','
            << format_fixed2(FitnessScore::round_reported(run.result.first_fitness)) << ','
            << format_fixed2(FitnessScore::round_reported(run.result.last_fitness)) << ",\""
            << format_path(run.result.best_path) << "\"\n";
    }
    return out.str();
}

std::string run_result_json(const RunResult& result, const GaConfig& config,
                            const std::string& course_file, const std::string& rdm_file) {
    nlohmann::json doc;
    doc["inputs"] = {{"course_file", course_file}, {"rdm_file", rdm_file}};
    doc["config"] = {
        {"population_size", config.population_size},
        {"generations", config.generations},
        {"selection", to_string(config.selection)},
        {"tournament_size", config.tournament_size},
        {"crossover", to_string(config.crossover)},
        {"crossover_rate", config.crossover_rate},
        {"mutation_rate", config.mutation_rate},
        {"elitism_count", config.elitism_count},
        {"init", to_string(config.init)},
        {"hc_iterations", config.hc_iterations},
        {"sa_schedule",
         {{"initial_temperature", config.sa_schedule.initial_temperature},
          {"cooling_factor", config.sa_schedule.cooling_factor},
          {"steps_per_seed", config.sa_schedule.steps_per_seed}}},
        {"fitness", {{"w", config.fitness_params.w}, {"variant", to_string(config.fitness_params.variant)}}},
        {"rng_seed", config.rng_seed},
    };
    doc["result"] = {
        {"first_fitness", result.first_fitness},
        {"last_fitness", result.last_fitness},
        {"best_fitness", result.best_fitness.value},
        {"best_fitness_reported", result.best_fitness.reported},
        {"best_path", result.best_path},
    };
    nlohmann::json convergence = nlohmann::json::array();
    for (const GenerationStats& g : result.convergence) {
        convergence.push_back({{"generation", g.generation},
                               {"best_fitness", g.best_fitness},
                               {"mean_fitness", g.mean_fitness}});
    }
    doc["result"]["convergence"] = std::move(convergence);
    return doc.dump(2) + "\n";
}

}  // namespace lpga
