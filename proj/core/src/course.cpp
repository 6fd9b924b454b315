#include "lpga/course.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lpga {

RelationDegreeMatrix::RelationDegreeMatrix(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (n_ < 1) {
        throw std::invalid_argument("relation-degree matrix must have dimension >= 1");
    }
    if (values_.size() != static_cast<std::size_t>(n_) * n_) {
        throw std::invalid_argument("relation-degree matrix requires " + std::to_string(n_) + "x" +
                                    std::to_string(n_) + " values, got " +
                                    std::to_string(values_.size()));
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;  // diagonal is never read
            const double v = at(i, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("relation degree [" + std::to_string(i) + "][" +
                                            std::to_string(j) + "] = " + std::to_string(v) +
                                            " outside [0, 1]");
            }
        }
    }
}

bool RelationDegreeMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

Course::Course(std::vector<Concept> concepts, RelationDegreeMatrix rdm)
    : concepts_(std::move(concepts)), rdm_(std::move(rdm)) {
    const int n = static_cast<int>(concepts_.size());
    if (n < 1) {
        throw std::invalid_argument("course must contain at least one concept");
    }
    std::vector<int> ids(concepts_.size());
    std::transform(concepts_.begin(), concepts_.end(), ids.begin(),
                   [](const Concept& c) { return c.id; });
    if (!is_permutation_of(ids, n)) {
        throw std::invalid_argument("concept ids must form exactly {0, ..., " +
                                    std::to_string(n - 1) + "} with no gaps or duplicates");
    }
    std::sort(concepts_.begin(), concepts_.end(),
              [](const Concept& a, const Concept& b) { return a.id < b.id; });
    for (const Concept& c : concepts_) {
        if (!(c.rating > 0.0)) {
            throw std::invalid_argument("concept " + std::to_string(c.id) +
                                        ": rating must be > 0");
        }
        if (!(c.granularity > 0.0)) {
            throw std::invalid_argument("concept " + std::to_string(c.id) +
                                        ": granularity must be > 0");
        }
        if (!(c.difficulty >= 0.0)) {
            throw std::invalid_argument("concept " + std::to_string(c.id) +
                                        ": difficulty must be >= 0");
        }
    }
    if (rdm_.size() != n) {
        throw std::invalid_argument("relation-degree matrix dimension " +
                                    std::to_string(rdm_.size()) + " does not match concept count " +
                                    std::to_string(n));
    }
}

bool is_permutation_of(const LearningPath& path, int n) {
    if (n < 0 || path.size() != static_cast<std::size_t>(n)) return false;
    if (n <= 64) {
        std::uint64_t seen = 0;
        for (int id : path) {
            if (id < 0 || id >= n) return false;
            const std::uint64_t bit = std::uint64_t{1} << id;
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : path) {
        if (id < 0 || id >= n || seen[id]) return false;
        seen[id] = 1;
    }
    return true;
}

void require_permutation(const LearningPath& path, int n) {
    if (!is_permutation_of(path, n)) {
        throw std::invalid_argument("path is not a permutation of {0, ..., " +
                                    std::to_string(n - 1) + "}");
    }
}

LearningPath traditional_path(const Course& course) {
    LearningPath path(static_cast<std::size_t>(course.size()));
    std::iota(path.begin(), path.end(), 0);
    return path;
}

}  // namespace lpga
