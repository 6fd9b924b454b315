#pragma once

#include <string>
#include <vector>

namespace lpga {

/// One learning object of a course: an atomic unit of content with the
/// attributes the path objective consumes.
struct Concept {
    int id = 0;                ///< dense index, 0-based
    std::string title;
    double difficulty = 0.0;   ///< >= 0
    double granularity = 0.0;  ///< duration in minutes, > 0
    double rating = 1.0;       ///< > 0 (divisor in the objective)

    bool operator==(const Concept&) const = default;
};

/// Pairwise coupling strengths between concepts, stored row-major.
///
/// Orientation is fixed: `at(current, previous)` is the degree used when the
/// path moves from `previous` to `current` (row = current, column = previous).
/// Off-diagonal entries must lie in [0, 1]; diagonal entries are never read by
/// a valid path and may hold anything. The matrix need not be symmetric.
class RelationDegreeMatrix {
public:
    RelationDegreeMatrix(int n, std::vector<double> values);

    int size() const { return n_; }

    double at(int current, int previous) const {
        return values_[static_cast<std::size_t>(current) * n_ + previous];
    }

    const std::vector<double>& values() const { return values_; }

    /// True when every off-diagonal pair satisfies v[i][j] == v[j][i].
    bool is_symmetric() const;

    bool operator==(const RelationDegreeMatrix&) const = default;

private:
    int n_;
    std::vector<double> values_;  // n_ * n_, row-major
};

/// A course: concepts indexed by id 0..n-1 plus their relation-degree matrix.
/// Immutable after construction and safe to share across concurrent runs.
class Course {
public:
    /// Validates and takes ownership. Concepts may arrive in any order as long
    /// as their ids form exactly {0, ..., n-1}; they are stored sorted by id.
    /// Throws std::invalid_argument on any violated invariant.
    Course(std::vector<Concept> concepts, RelationDegreeMatrix rdm);

    int size() const { return static_cast<int>(concepts_.size()); }
    const Concept& concept_at(int id) const { return concepts_[id]; }
    const std::vector<Concept>& concepts() const { return concepts_; }
    const RelationDegreeMatrix& rdm() const { return rdm_; }

    bool operator==(const Course&) const = default;

private:
    std::vector<Concept> concepts_;
    RelationDegreeMatrix rdm_;
};

/// A candidate learning path: a permutation of the concept ids.
using LearningPath = std::vector<int>;

/// True when `path` contains each id in {0, ..., n-1} exactly once.
bool is_permutation_of(const LearningPath& path, int n);

/// Throws std::invalid_argument when `path` is not a permutation of {0..n-1}.
void require_permutation(const LearningPath& path, int n);

/// The baseline ordering: the identity permutation [0, 1, ..., n-1].
LearningPath traditional_path(const Course& course);

}  // namespace lpga
