#pragma once

#include <vector>

#include "lpga/ga_config.hpp"
#include "lpga/rng.hpp"

namespace lpga {

/// Runs the generational loop for exactly config.generations generations,
/// starting from `seed_population` (size must equal config.population_size,
/// every individual already evaluated).
///
/// Each generation carries the elitism_count fittest over unchanged, then
/// fills the remainder with offspring: two parents chosen by config.selection,
/// recombined by config.crossover with probability crossover_rate (cloned
/// otherwise), each offspring swap-mutated with probability mutation_rate and
/// re-evaluated. convergence[g-1] records (best, mean) of the population after
/// generation g's step; best_path is the fittest individual observed anywhere,
/// the seed population included.
///
/// All randomness comes from a generator derived from config.rng_seed on the
/// Evolve stream, so runs differing only in how they were seeded share every
/// draw this loop makes.
RunResult evolve(const Course& course, const GaConfig& config,
                 std::vector<Individual> seed_population);

}  // namespace lpga
