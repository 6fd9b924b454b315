#include "lpga/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lpga/operators.hpp"

namespace lpga {

namespace {

LearningPath random_permutation(int n, Rng& rng) {
    LearningPath path(static_cast<std::size_t>(n));
    std::iota(path.begin(), path.end(), 0);
    std::shuffle(path.begin(), path.end(), rng);
    return path;
}

void check_sa_schedule(const SaSchedule& schedule) {
    if (!(schedule.initial_temperature > 0.0)) {
        throw std::invalid_argument("sa initial_temperature must be > 0");
    }
    if (!(schedule.cooling_factor > 0.0 && schedule.cooling_factor < 1.0)) {
        throw std::invalid_argument("sa cooling_factor must lie in (0, 1)");
    }
    if (schedule.steps_per_seed < 1) {
        throw std::invalid_argument("sa steps_per_seed must be >= 1");
    }
}

}  // namespace

std::vector<LearningPath> random_population(int concept_count, int size, Rng& rng) {
    if (concept_count < 1) throw std::invalid_argument("concept_count must be >= 1");
    if (size < 1) throw std::invalid_argument("population size must be >= 1");
    std::vector<LearningPath> population;
    population.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        population.push_back(random_permutation(concept_count, rng));
    }
    return population;
}

LearningPath hill_climb_seed(const Course& course, const FitnessParams& params, int iterations,
                             Rng& rng) {
    if (iterations < 1) throw std::invalid_argument("hill climbing iterations must be >= 1");
    LearningPath current = random_permutation(course.size(), rng);
    if (course.size() < 2) return current;  // no neighbors exist
    double current_fitness = evaluate(current, course, params).value;
    for (int it = 0; it < iterations; ++it) {
        LearningPath neighbor = swap_mutate(current, rng);
        const double neighbor_fitness = evaluate(neighbor, course, params).value;
        if (neighbor_fitness > current_fitness) {
            current = std::move(neighbor);
            current_fitness = neighbor_fitness;
        }
    }
    return current;
}

double accept_probability(double current_fitness, double new_fitness, double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature must be > 0");
    }
    if (new_fitness >= current_fitness) return 1.0;
    return std::exp((new_fitness - current_fitness) / temperature);
}

LearningPath simulated_annealing_seed(const Course& course, const FitnessParams& params,
                                      const SaSchedule& schedule, Rng& rng) {
    check_sa_schedule(schedule);
    LearningPath current = random_permutation(course.size(), rng);
    if (course.size() < 2) return current;

    double current_fitness = evaluate(current, course, params).value;
    LearningPath best = current;
    double best_fitness = current_fitness;
    double temperature = schedule.initial_temperature;
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int step = 0; step < schedule.steps_per_seed; ++step) {
        LearningPath neighbor = swap_mutate(current, rng);
        const double neighbor_fitness = evaluate(neighbor, course, params).value;
        const double p = accept_probability(current_fitness, neighbor_fitness, temperature);
        if (p >= 1.0 || u01(rng) < p) {
            current = std::move(neighbor);
            current_fitness = neighbor_fitness;
            if (current_fitness > best_fitness) {
                best = current;
                best_fitness = current_fitness;
            }
        }
        temperature *= schedule.cooling_factor;
    }
    return best;
}

std::vector<Individual> seed_population(const Course& course, const GaConfig& config, Rng& rng) {
    validate(config);
    const FitnessParams& params = config.fitness_params;
    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(config.population_size));

    const auto add = [&](LearningPath path) {
        FitnessScore score = evaluate(path, course, params);
        population.push_back(Individual{std::move(path), score});
    };

    switch (config.init) {
        case InitApproach::Random:
            for (LearningPath& path : random_population(course.size(), config.population_size, rng)) {
                add(std::move(path));
            }
            break;
        case InitApproach::HillClimbing:
            for (int i = 0; i < config.population_size; ++i) {
                add(hill_climb_seed(course, params, config.hc_iterations, rng));
            }
            break;
        case InitApproach::SimulatedAnnealing:
            for (int i = 0; i < config.population_size; ++i) {
                add(simulated_annealing_seed(course, params, config.sa_schedule, rng));
            }
            break;
    }
    return population;
}

}  // namespace lpga
