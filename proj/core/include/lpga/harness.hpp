#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpga/ga.hpp"
#include "lpga/seeding.hpp"

namespace lpga {

/// Seeds the population (Seeding stream) and evolves it (Evolve stream), both
/// streams derived from config.rng_seed. Identical (course, config) pairs give
/// bit-identical results.
RunResult run_single(const Course& course, const GaConfig& config);

/// One run of the experiment matrix: which cell it belongs to, the seed it
/// used, and its full result.
struct MatrixRun {
    SelectionPolicy selection{};
    InitApproach init{};
    CrossoverKind crossover{};
    std::uint64_t seed = 0;
    RunResult result;
};

/// Per-cell aggregate over the repeats of one configuration cell.
struct MatrixCellSummary {
    SelectionPolicy selection{};
    InitApproach init{};
    CrossoverKind crossover{};
    double mean_first_fitness = 0.0;
    double mean_last_fitness = 0.0;
    double stddev_last_fitness = 0.0;  ///< sample stddev; 0 when repeats == 1
    double best_fitness = 0.0;         ///< best score seen in any repeat
    LearningPath best_path;            ///< the path that scored it
};

/// The full 12-cell cross product {tournament, roulette} x {random, hc, sa}
/// x {pmx, cycle}. `runs` holds every (cell, seed) run in cell-major order;
/// `rows` always has exactly 12 entries, one per cell, in the same order.
struct MatrixReport {
    std::vector<MatrixRun> runs;
    std::vector<MatrixCellSummary> rows;
};

/// Runs every matrix cell `repeats` times. Repeat r of every cell uses seed
/// base.rng_seed + r, so cells are compared on paired seeds. base supplies
/// every other knob.
MatrixReport run_matrix(const Course& course, const GaConfig& base, int repeats);

/// `generation,best_fitness,mean_fitness`, one row per generation.
std::string convergence_csv(const RunResult& result);

/// `selection,init,crossover,seed,first_fitness,last_fitness,best_path`, one
/// row per run in report order. Fitness columns use the 2-decimal reported
/// form; the path is a quoted bracketed id list.
std::string matrix_csv(const MatrixReport& report);

/// Self-describing result document: the full config, the input files, the
/// scores at full precision, the best path and the convergence series.
std::string run_result_json(const RunResult& result, const GaConfig& config,
                            const std::string& course_file, const std::string& rdm_file);

std::string format_path(const LearningPath& path);  ///< "[0, 2, 9, ...]"

}  // namespace lpga
