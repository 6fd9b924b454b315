#pragma once

#include <cstdint>

#include "lpga/fitness.hpp"

namespace lpga {

/// Largest course the exhaustive oracle will accept (10! ~ 3.6M evaluations).
inline constexpr int max_oracle_concepts = 10;

struct OracleResult {
    LearningPath best_path;
    double best_fitness = 0.0;
    std::uint64_t evaluated_count = 0;  ///< always n!
};

/// Ground truth by enumeration: evaluates every permutation in lexicographic
/// order and returns the maximum-fitness path, ties broken by the
/// lexicographically smallest path. Deterministic, no randomness. Throws
/// std::invalid_argument when course.size() > max_oracle_concepts.
OracleResult exhaustive_best(const Course& course, const FitnessParams& params);

}  // namespace lpga
