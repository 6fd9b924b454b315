#include "lpga/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lpga {

namespace {

/// Two distinct positions in [0, n), drawn uniformly over ordered pairs.
std::pair<int, int> distinct_positions(int n, Rng& rng) {
    const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, n - 2)(rng);
    if (b >= a) ++b;
    return {a, b};
}

/// Position of each value in `path`, indexed by value. Rejects negative or
/// duplicate values.
std::vector<int> positions_by_value(const LearningPath& path, const char* who) {
    int max_value = -1;
    for (int v : path) {
        if (v < 0) {
            throw std::invalid_argument(std::string(who) + ": values must be non-negative");
        }
        max_value = std::max(max_value, v);
    }
    std::vector<int> pos(static_cast<std::size_t>(max_value) + 1, -1);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (pos[path[i]] != -1) {
            throw std::invalid_argument(std::string(who) + ": duplicate value " +
                                        std::to_string(path[i]));
        }
        pos[path[i]] = static_cast<int>(i);
    }
    return pos;
}

void require_same_values(const LearningPath& other, const std::vector<int>& pos,
                         const char* who) {
    for (int v : other) {
        if (v < 0 || static_cast<std::size_t>(v) >= pos.size() || pos[v] == -1) {
            throw std::invalid_argument(std::string(who) +
                                        ": parents are not rearrangements of the same values");
        }
    }
}

/// One PMX child: the segment comes from `seg_parent`, everything else from
/// `other`, with displaced segment-window values of `other` relocated through
/// the mapping.
LearningPath pmx_child(const LearningPath& seg_parent, const LearningPath& other, int cut1,
                       int cut2) {
    const int n = static_cast<int>(seg_parent.size());
    const auto pos_in_other = positions_by_value(other, "pmx_crossover");
    require_same_values(seg_parent, pos_in_other, "pmx_crossover");

    LearningPath child(static_cast<std::size_t>(n), -1);
    std::vector<char> in_segment(pos_in_other.size(), 0);
    for (int i = cut1; i <= cut2; ++i) {
        child[i] = seg_parent[i];
        in_segment[seg_parent[i]] = 1;
    }
    // Values the segment displaced out of `other` get re-homed by chasing the
    // segment mapping until a free slot outside the window is found.
    for (int i = cut1; i <= cut2; ++i) {
        const int value = other[i];
        if (in_segment[value]) continue;
        int slot = i;
        do {
            slot = pos_in_other[seg_parent[slot]];
        } while (slot >= cut1 && slot <= cut2);
        child[slot] = value;
    }
    for (int i = 0; i < n; ++i) {
        if (child[i] == -1) child[i] = other[i];
    }
    return child;
}

}  // namespace

std::size_t tournament_select(const std::vector<Individual>& population, int k, Rng& rng) {
    const int n = static_cast<int>(population.size());
    if (n == 0) throw std::invalid_argument("tournament_select: population is empty");
    if (k < 1 || k > n) {
        throw std::invalid_argument("tournament_select: k must lie in [1, " + std::to_string(n) +
                                    "], got " + std::to_string(k));
    }
    // Partial Fisher-Yates gives a uniform k-subset without replacement.
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::size_t best = static_cast<std::size_t>(n);
    for (int i = 0; i < k; ++i) {
        const int j = std::uniform_int_distribution<int>(i, n - 1)(rng);
        std::swap(idx[i], idx[j]);
        const auto cand = static_cast<std::size_t>(idx[i]);
        if (best == static_cast<std::size_t>(n) ||
            population[cand].fitness.value > population[best].fitness.value ||
            (population[cand].fitness.value == population[best].fitness.value && cand < best)) {
            best = cand;
        }
    }
    return best;
}

std::size_t roulette_select(const std::vector<Individual>& population, Rng& rng) {
    if (population.empty()) throw std::invalid_argument("roulette_select: population is empty");
    double total = 0.0;
    for (const Individual& ind : population) {
        if (ind.fitness.value < 0.0) {
            throw std::invalid_argument("roulette_select: negative fitness " +
                                        std::to_string(ind.fitness.value));
        }
        total += ind.fitness.value;
    }
    if (!(total > 0.0)) {
        throw std::invalid_argument("roulette_select: total fitness must be > 0");
    }
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double cumulative = 0.0;
    for (std::size_t j = 0; j < population.size(); ++j) {
        cumulative += population[j].fitness.value / total;
        if (cumulative >= u) return j;
    }
    return population.size() - 1;
}

LearningPath swap_positions(const LearningPath& path, int a, int b) {
    const int n = static_cast<int>(path.size());
    if (a < 0 || a >= n || b < 0 || b >= n) {
        throw std::invalid_argument("swap_positions: position outside path");
    }
    LearningPath out = path;
    std::swap(out[a], out[b]);
    return out;
}

LearningPath swap_mutate(const LearningPath& path, Rng& rng) {
    if (path.size() < 2) {
        throw std::invalid_argument("swap_mutate: path must have at least 2 positions");
    }
    const auto [a, b] = distinct_positions(static_cast<int>(path.size()), rng);
    return swap_positions(path, a, b);
}

std::pair<LearningPath, LearningPath> pmx_crossover_at(const LearningPath& parent1,
                                                       const LearningPath& parent2, int cut1,
                                                       int cut2) {
    if (parent1.size() != parent2.size()) {
        throw std::invalid_argument("pmx_crossover: parents differ in size");
    }
    const int n = static_cast<int>(parent1.size());
    if (n < 2) throw std::invalid_argument("pmx_crossover: parents must have size >= 2");
    if (cut1 < 0 || cut2 >= n || cut1 >= cut2) {
        throw std::invalid_argument("pmx_crossover: cuts must satisfy 0 <= cut1 < cut2 < size");
    }
    return {pmx_child(parent1, parent2, cut1, cut2), pmx_child(parent2, parent1, cut1, cut2)};
}

std::pair<LearningPath, LearningPath> pmx_crossover(const LearningPath& parent1,
                                                    const LearningPath& parent2, Rng& rng) {
    if (parent1.size() != parent2.size()) {
        throw std::invalid_argument("pmx_crossover: parents differ in size");
    }
    if (parent1.size() < 2) {
        throw std::invalid_argument("pmx_crossover: parents must have size >= 2");
    }
    auto [a, b] = distinct_positions(static_cast<int>(parent1.size()), rng);
    if (a > b) std::swap(a, b);
    return pmx_crossover_at(parent1, parent2, a, b);
}

std::pair<LearningPath, LearningPath> cycle_crossover(const LearningPath& parent1,
                                                      const LearningPath& parent2) {
    if (parent1.size() != parent2.size()) {
        throw std::invalid_argument("cycle_crossover: parents differ in size");
    }
    const int n = static_cast<int>(parent1.size());
    const auto pos_in_p1 = positions_by_value(parent1, "cycle_crossover");
    require_same_values(parent2, pos_in_p1, "cycle_crossover");

    LearningPath child1(parent1.size());
    LearningPath child2(parent1.size());
    std::vector<char> consumed(parent1.size(), 0);
    int cycle_number = 0;
    for (int start = 0; start < n; ++start) {
        if (consumed[start]) continue;
        ++cycle_number;
        const bool odd = (cycle_number % 2) == 1;
        int pos = start;
        do {
            consumed[pos] = 1;
            child1[pos] = odd ? parent1[pos] : parent2[pos];
            child2[pos] = odd ? parent2[pos] : parent1[pos];
            pos = pos_in_p1[parent2[pos]];
        } while (pos != start);
    }
    return {std::move(child1), std::move(child2)};
}

}  // namespace lpga
