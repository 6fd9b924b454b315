#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpga/fitness.hpp"

namespace lpga {

enum class SelectionPolicy { Tournament, Roulette };
enum class CrossoverKind { Pmx, Cycle };
enum class InitApproach { Random, HillClimbing, SimulatedAnnealing };

/// Geometric cooling schedule for simulated-annealing seeding:
/// T(t+1) = cooling_factor * T(t), starting at initial_temperature.
struct SaSchedule {
    double initial_temperature = 10.0;
    double cooling_factor = 0.95;  ///< in (0, 1)
    int steps_per_seed = 500;
};

/// Full configuration of one GA run. Defaults (population 100, crossover 0.9,
/// mutation 0.1, tournament size 5, elitism 1, HC 100 iterations, SA 10/0.95/500)
/// are this project's choices; see the README for which knobs matter where.
struct GaConfig {
    int population_size = 100;
    int generations = 150;
    SelectionPolicy selection = SelectionPolicy::Tournament;
    int tournament_size = 5;  ///< k, in [1, population_size]
    CrossoverKind crossover = CrossoverKind::Pmx;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
    int elitism_count = 1;  ///< in [0, population_size)
    InitApproach init = InitApproach::Random;
    std::uint64_t rng_seed = 0;
    FitnessParams fitness_params{};
    int hc_iterations = 100;  ///< hill-climbing steps per seeded individual
    SaSchedule sa_schedule{};
};

/// Throws std::invalid_argument naming the first violated field.
void validate(const GaConfig& config);

/// A candidate solution with its cached score. The cache is maintained by the
/// engine: it always equals evaluate(path) under the run's course and params.
struct Individual {
    LearningPath path;
    FitnessScore fitness;
};

struct GenerationStats {
    int generation = 0;  ///< 1-based
    double best_fitness = 0.0;
    double mean_fitness = 0.0;

    bool operator==(const GenerationStats&) const = default;
};

/// Outcome of one evolve() call. `convergence` holds one entry per generation,
/// recorded after that generation's evolution step; with elitism >= 1 the
/// best_fitness series is non-decreasing.
struct RunResult {
    double first_fitness = 0.0;  ///< best of generation 1
    double last_fitness = 0.0;   ///< best of the final generation
    LearningPath best_path;      ///< fittest individual ever observed
    FitnessScore best_fitness;   ///< its score
    std::vector<GenerationStats> convergence;
};

// CLI-facing names: tournament/roulette, pmx/cycle, random/hc/sa, text/listing.
std::string to_string(SelectionPolicy v);
std::string to_string(CrossoverKind v);
std::string to_string(InitApproach v);
std::string to_string(FitnessVariant v);
SelectionPolicy parse_selection(const std::string& name);
CrossoverKind parse_crossover(const std::string& name);
InitApproach parse_init(const std::string& name);
FitnessVariant parse_variant(const std::string& name);

}  // namespace lpga
