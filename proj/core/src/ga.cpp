#include "lpga/ga.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "lpga/operators.hpp"

namespace lpga {

namespace {

/// Index of the fittest individual; ties keep the lowest index.
std::size_t fittest_index(const std::vector<Individual>& population) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (population[i].fitness.value > population[best].fitness.value) best = i;
    }
    return best;
}

/// Population indices ordered by fitness descending, index ascending on ties.
std::vector<std::size_t> fitness_order(const std::vector<Individual>& population) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return population[a].fitness.value > population[b].fitness.value;
    });
    return order;
}

double mean_fitness(const std::vector<Individual>& population) {
    double sum = 0.0;
    for (const Individual& ind : population) sum += ind.fitness.value;
    return sum / static_cast<double>(population.size());
}

}  // namespace

RunResult evolve(const Course& course, const GaConfig& config,
                 std::vector<Individual> population) {
    validate(config);
    if (population.size() != static_cast<std::size_t>(config.population_size)) {
        throw std::invalid_argument("seed population size " + std::to_string(population.size()) +
                                    " does not match population_size " +
                                    std::to_string(config.population_size));
    }
    const int n = course.size();
    Rng rng = make_rng(config.rng_seed, RngStream::Evolve);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    const auto select_parent = [&]() -> std::size_t {
        return config.selection == SelectionPolicy::Tournament
                   ? tournament_select(population, config.tournament_size, rng)
                   : roulette_select(population, rng);
    };

    Individual best = population[fittest_index(population)];
    std::vector<GenerationStats> convergence;
    convergence.reserve(static_cast<std::size_t>(config.generations));
    std::vector<Individual> next;
    next.reserve(population.size());

    for (int gen = 1; gen <= config.generations; ++gen) {
        next.clear();
        const auto order = fitness_order(population);
        for (int e = 0; e < config.elitism_count; ++e) {
            next.push_back(population[order[e]]);
        }

        while (next.size() < population.size()) {
            const Individual& pa = population[select_parent()];
            const Individual& pb = population[select_parent()];

            LearningPath c1, c2;
            if (n >= 2 && u01(rng) < config.crossover_rate) {
                std::tie(c1, c2) = config.crossover == CrossoverKind::Pmx
                                       ? pmx_crossover(pa.path, pb.path, rng)
                                       : cycle_crossover(pa.path, pb.path);
            } else {
                c1 = pa.path;
                c2 = pb.path;
            }

            const auto add_offspring = [&](LearningPath child) {
                if (n >= 2 && u01(rng) < config.mutation_rate) {
                    child = swap_mutate(child, rng);
                }
                FitnessScore score = evaluate(child, course, config.fitness_params);
                next.push_back(Individual{std::move(child), score});
            };
            add_offspring(std::move(c1));
            if (next.size() < population.size()) add_offspring(std::move(c2));
        }
        population.swap(next);

#ifndef NDEBUG
        for (const Individual& ind : population) {
            assert(is_permutation_of(ind.path, n) && "offspring left the permutation space");
        }
#endif

        const std::size_t gen_best = fittest_index(population);
        if (population[gen_best].fitness.value > best.fitness.value) {
            best = population[gen_best];
        }
        convergence.push_back(GenerationStats{gen, population[gen_best].fitness.value,
                                              mean_fitness(population)});
    }

    RunResult result;
    result.first_fitness = convergence.front().best_fitness;
    result.last_fitness = convergence.back().best_fitness;
    result.best_path = best.path;
    result.best_fitness = best.fitness;
    result.convergence = std::move(convergence);
    return result;
}

}  // namespace lpga
