#pragma once

#include "lpga/course.hpp"

namespace lpga {

/// Selects how the adjustable weight w splits between the relation-degree and
/// difficulty terms of the objective. The two variants are not equivalent and
/// generally rank paths differently; `Listing` is the default.
enum class FitnessVariant {
    Text,     ///< per-position term: (g/r) * ((1-w) * rd) + w * (1 - d)
    Listing,  ///< per-position term: (g/r) * (w * rd)     + (1-w) * d
};

struct FitnessParams {
    double w = 0.5;  ///< adjustable weight in [0, 1]
    FitnessVariant variant = FitnessVariant::Listing;
};

/// A path score. `value` keeps full precision and is what every comparison,
/// selection and convergence record uses; `reported` is the 2-decimal
/// half-up-rounded presentation form.
struct FitnessScore {
    double value = 0.0;
    double reported = 0.0;

    static FitnessScore of(double v) { return {v, round_reported(v)}; }

    /// Rounds half-up to 2 decimals: floor(v * 100 + 0.5) / 100.
    static double round_reported(double v);
};

/// Scores a learning path. Position 0 contributes no term; every later
/// position i adds one term built from the current concept's granularity g,
/// rating r, difficulty d and the relation degree rd between the previous and
/// current concept (looked up as rdm.at(current, previous)):
///
///   Listing: (g/r) * (w * rd)       + (1-w) * d
///   Text:    (g/r) * ((1-w) * rd)   + w * (1 - d)
///
/// Higher value = fitter. Pure: identical inputs give bit-identical output.
/// Throws std::invalid_argument when `path` is not a permutation of the
/// course's ids or when params.w is outside [0, 1].
FitnessScore evaluate(const LearningPath& path, const Course& course, const FitnessParams& params);

}  // namespace lpga
