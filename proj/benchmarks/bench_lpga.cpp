#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>

#include "lpga/ga.hpp"
#include "lpga/operators.hpp"
#include "lpga/oracle.hpp"
#include "lpga/seeding.hpp"

namespace {

using namespace lpga;

Course synthetic_course(int n) {
    std::vector<Concept> concepts;
    concepts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        concepts.push_back({i, "concept " + std::to_string(i), 1.0 + 0.25 * (i % 7),
                            5.0 + (i % 5) * 3.0, 5.0 + (i % 4)});
    }
    Rng rng(17);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<double> values(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = u01(rng);
            values[static_cast<std::size_t>(i) * n + j] = v;
            values[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return Course(std::move(concepts), RelationDegreeMatrix(n, std::move(values)));
}

void bm_evaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Course course = synthetic_course(n);
    LearningPath path = traditional_path(course);
    Rng rng(1);
    std::shuffle(path.begin(), path.end(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(path, course, {}).value);
    }
}
BENCHMARK(bm_evaluate)->Arg(13)->Arg(50);

void bm_swap_mutate(benchmark::State& state) {
    LearningPath path(13);
    std::iota(path.begin(), path.end(), 0);
    Rng rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(swap_mutate(path, rng));
    }
}
BENCHMARK(bm_swap_mutate);

void bm_pmx_crossover(benchmark::State& state) {
    LearningPath p1(13), p2(13);
    std::iota(p1.begin(), p1.end(), 0);
    std::iota(p2.begin(), p2.end(), 0);
    Rng rng(3);
    std::shuffle(p2.begin(), p2.end(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pmx_crossover(p1, p2, rng));
    }
}
BENCHMARK(bm_pmx_crossover);

void bm_cycle_crossover(benchmark::State& state) {
    LearningPath p1(13), p2(13);
    std::iota(p1.begin(), p1.end(), 0);
    std::iota(p2.begin(), p2.end(), 0);
    Rng rng(4);
    std::shuffle(p2.begin(), p2.end(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_crossover(p1, p2));
    }
}
BENCHMARK(bm_cycle_crossover);

void bm_tournament_select(benchmark::State& state) {
    Course course = synthetic_course(13);
    GaConfig config;
    Rng rng = make_rng(5, RngStream::Seeding);
    const auto population = seed_population(course, config, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tournament_select(population, 5, rng));
    }
}
BENCHMARK(bm_tournament_select);

void bm_roulette_select(benchmark::State& state) {
    Course course = synthetic_course(13);
    GaConfig config;
    Rng rng = make_rng(6, RngStream::Seeding);
    const auto population = seed_population(course, config, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(roulette_select(population, rng));
    }
}
BENCHMARK(bm_roulette_select);

void bm_evolve(benchmark::State& state) {
    Course course = synthetic_course(13);
    GaConfig config;
    config.population_size = 50;
    config.generations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rng rng = make_rng(7, RngStream::Seeding);
        auto population = seed_population(course, config, rng);
        benchmark::DoNotOptimize(evolve(course, config, std::move(population)).last_fitness);
    }
}
BENCHMARK(bm_evolve)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void bm_oracle(benchmark::State& state) {
    Course course = synthetic_course(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_best(course, {}).best_fitness);
    }
}
BENCHMARK(bm_oracle)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
