#pragma once

#include <vector>

#include "lpga/ga_config.hpp"
#include "lpga/rng.hpp"

namespace lpga {

/// `size` independent uniformly random permutations of {0, ..., n-1}.
std::vector<LearningPath> random_population(int concept_count, int size, Rng& rng);

/// Local search from a random start: each iteration proposes one random-swap
/// neighbor and moves only on strict fitness improvement. Returns the path
/// after `iterations` proposals, so its fitness is never below the start's.
LearningPath hill_climb_seed(const Course& course, const FitnessParams& params, int iterations,
                             Rng& rng);

/// Probability of accepting a move from current_fitness to new_fitness at
/// temperature T (> 0), under maximization: 1.0 on improvement or tie,
/// exp((new - current) / T) in (0, 1) otherwise.
double accept_probability(double current_fitness, double new_fitness, double temperature);

/// Annealed walk from a random start: each step proposes one random-swap
/// neighbor, accepts it with accept_probability, and cools geometrically.
/// Returns the best path observed anywhere on the trajectory.
LearningPath simulated_annealing_seed(const Course& course, const FitnessParams& params,
                                      const SaSchedule& schedule, Rng& rng);

/// Builds and evaluates the initial population per config.init. Hill climbing
/// and simulated annealing run once per population slot, each from a fresh
/// random start.
std::vector<Individual> seed_population(const Course& course, const GaConfig& config, Rng& rng);

}  // namespace lpga
