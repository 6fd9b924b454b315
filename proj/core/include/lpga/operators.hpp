#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpga/ga_config.hpp"
#include "lpga/rng.hpp"

namespace lpga {

/// Draws k distinct individuals uniformly without replacement and returns the
/// index of the fittest among them; ties go to the lowest population index.
/// Throws std::invalid_argument when k is outside [1, population size].
std::size_t tournament_select(const std::vector<Individual>& population, int k, Rng& rng);

/// Fitness-proportional selection: individual j is returned with probability
/// fitness_j / total. Draws u in [0, 1) and walks the cumulative normalized
/// fitness until the running share reaches u; if floating error exhausts the
/// walk, the last individual is returned. Requires every fitness >= 0 and a
/// positive total (std::invalid_argument otherwise).
std::size_t roulette_select(const std::vector<Individual>& population, Rng& rng);

/// Copy of `path` with positions a and b exchanged.
LearningPath swap_positions(const LearningPath& path, int a, int b);

/// Copy of `path` with two uniformly drawn distinct positions exchanged.
/// Requires path.size() >= 2.
LearningPath swap_mutate(const LearningPath& path, Rng& rng);

/// Partially-mapped crossover with the segment [cut1, cut2] (inclusive).
/// Each child copies the segment from one parent, resolves the displaced
/// values of the other parent through the segment's position mapping, and
/// fills the rest from the other parent. Parents must be equal-length
/// rearrangements of the same values, length >= 2.
std::pair<LearningPath, LearningPath> pmx_crossover_at(const LearningPath& parent1,
                                                       const LearningPath& parent2, int cut1,
                                                       int cut2);

/// pmx_crossover_at with two distinct uniformly drawn cut points (sorted, so a
/// full-length segment is possible and degenerates to copying the parent).
std::pair<LearningPath, LearningPath> pmx_crossover(const LearningPath& parent1,
                                                    const LearningPath& parent2, Rng& rng);

/// Cycle crossover. Positions are partitioned into cycles (following values
/// between the parents, starting each cycle at the lowest unconsumed
/// position); child one copies odd-numbered cycles from parent one and
/// even-numbered cycles from parent two, child two the other way around.
/// Deterministic: no randomness is involved.
std::pair<LearningPath, LearningPath> cycle_crossover(const LearningPath& parent1,
                                                      const LearningPath& parent2);

}  // namespace lpga
