#include "lpga/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lpga {

OracleResult exhaustive_best(const Course& course, const FitnessParams& params) {
    const int n = course.size();
    if (n > max_oracle_concepts) {
        throw std::invalid_argument("course too large for exhaustive search: n = " +
                                    std::to_string(n) + " > " +
                                    std::to_string(max_oracle_concepts));
    }

    LearningPath perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    OracleResult result;
    result.best_path = perm;
    result.best_fitness = evaluate(perm, course, params).value;
    result.evaluated_count = 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ++result.evaluated_count;
        const double f = evaluate(perm, course, params).value;
        // Strict improvement only: lexicographic enumeration then keeps the
        // lexicographically smallest path on ties.
        if (f > result.best_fitness) {
            result.best_fitness = f;
            result.best_path = perm;
        }
    }
    return result;
}

}  // namespace lpga
