#include "lpga/fitness.hpp"

#include <cmath>
#include <stdexcept>

namespace lpga {

double FitnessScore::round_reported(double v) {
    return std::floor(v * 100.0 + 0.5) / 100.0;
}

FitnessScore evaluate(const LearningPath& path, const Course& course,
                      const FitnessParams& params) {
    if (!(params.w >= 0.0 && params.w <= 1.0)) {
        throw std::invalid_argument("fitness weight w must lie in [0, 1]");
    }
    require_permutation(path, course.size());

    const RelationDegreeMatrix& rdm = course.rdm();
    const double w = params.w;
    double sum = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Concept& cur = course.concept_at(path[i]);
        const double rd = rdm.at(path[i], path[i - 1]);
        const double gr = cur.granularity / cur.rating;
        if (params.variant == FitnessVariant::Listing) {
            sum += gr * (w * rd) + (1.0 - w) * cur.difficulty;
        } else {
            sum += gr * ((1.0 - w) * rd) + w * (1.0 - cur.difficulty);
        }
    }
    return FitnessScore::of(sum);
}

}  // namespace lpga
