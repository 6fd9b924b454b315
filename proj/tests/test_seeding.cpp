#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "lpga/seeding.hpp"
#include "test_util.hpp"

using namespace lpga;

TEST_SUITE("seeding") {

TEST_CASE("random population members are valid permutations") {
    Rng rng(1);
    const auto population = random_population(13, 50, rng);
    REQUIRE(population.size() == 50);
    for (const LearningPath& path : population) {
        CHECK(is_permutation_of(path, 13));
    }
    CHECK_THROWS_AS(random_population(0, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_population(5, 0, rng), std::invalid_argument);
}

TEST_CASE("random population covers the space, not one shuffle repeated") {
    Rng rng(2);
    const auto population = random_population(13, 50, rng);
    int distinct = 0;
    for (const LearningPath& path : population) {
        distinct += path != population[0] ? 1 : 0;
    }
    CHECK(distinct > 40);
}

TEST_CASE("three-concept shuffles hit each of the six orders about equally often") {
    Rng rng(3);
    const int draws = 60000;
    const auto population = random_population(3, draws, rng);
    std::map<LearningPath, int> counts;
    for (const LearningPath& path : population) ++counts[path];
    REQUIRE(counts.size() == 6);
    const double expected = draws / 6.0;
    const double slack = draws * 0.01;
    for (const auto& [path, count] : counts) {
        CHECK(std::abs(count - expected) <= slack);
    }
}

TEST_CASE("acceptance probability matches its definition") {
    CHECK(accept_probability(10.0, 11.0, 5.0) == 1.0);
    CHECK(accept_probability(10.0, 10.0, 5.0) == 1.0);
    CHECK(std::abs(accept_probability(11.0, 10.0, 1.0) - std::exp(-1.0)) <= 1e-12);
    CHECK(std::abs(accept_probability(10.0, 8.0, 4.0) - std::exp(-0.5)) <= 1e-12);
    CHECK_THROWS_AS(accept_probability(1.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(accept_probability(1.0, 2.0, -1.0), std::invalid_argument);
}

TEST_CASE("acceptance probability grows with the candidate fitness and with temperature") {
    double previous = 0.0;
    for (const double candidate : {4.0, 6.0, 8.0, 9.5, 9.9}) {
        const double p = accept_probability(10.0, candidate, 2.0);
        CHECK(p > previous);
        CHECK(p < 1.0);
        previous = p;
    }
    previous = 0.0;
    for (const double temperature : {0.5, 1.0, 2.0, 8.0, 50.0}) {
        const double p = accept_probability(10.0, 8.0, temperature);
        CHECK(p > previous);
        CHECK(p < 1.0);
        previous = p;
    }
}

TEST_CASE("hill climbing on two concepts returns the fitter of both orders") {
    Course course = test::sample_sub_course(2);
    const FitnessParams params{};
    const double best = std::max(evaluate({0, 1}, course, params).value,
                                 evaluate({1, 0}, course, params).value);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const LearningPath path = hill_climb_seed(course, params, 10, rng);
        CHECK(evaluate(path, course, params).value == best);
    }
}

TEST_CASE("hill climbing never lands below a random start, and more iterations never hurt on average") {
    Course course = test::sample_course();
    const FitnessParams params{};
    double short_total = 0.0;
    double long_total = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng_start(seed);
        const double start =
            evaluate(random_population(course.size(), 1, rng_start)[0], course, params).value;

        Rng rng_short(seed);
        const double after_short =
            evaluate(hill_climb_seed(course, params, 10, rng_short), course, params).value;
        CHECK(after_short >= start);

        Rng rng_long(seed);
        short_total += after_short;
        long_total +=
            evaluate(hill_climb_seed(course, params, 200, rng_long), course, params).value;
    }
    CHECK(long_total >= short_total);
}

TEST_CASE("hill climbing validates its iteration count") {
    Course course = test::sample_sub_course(3);
    Rng rng(1);
    CHECK_THROWS_AS(hill_climb_seed(course, {}, 0, rng), std::invalid_argument);
}

TEST_CASE("simulated annealing returns a valid path and beats random starts on average") {
    Course course = test::sample_sub_course(7);
    const FitnessParams params{};
    const SaSchedule schedule{};
    double sa_total = 0.0;
    double random_total = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng_sa(seed);
        const LearningPath path = simulated_annealing_seed(course, params, schedule, rng_sa);
        CHECK(is_permutation_of(path, course.size()));
        sa_total += evaluate(path, course, params).value;

        Rng rng_random(seed);
        random_total +=
            evaluate(random_population(course.size(), 1, rng_random)[0], course, params).value;
    }
    CHECK(sa_total >= random_total);
}

TEST_CASE("simulated annealing validates its schedule") {
    Course course = test::sample_sub_course(3);
    Rng rng(1);
    CHECK_THROWS_AS(simulated_annealing_seed(course, {}, {0.0, 0.95, 500}, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulated_annealing_seed(course, {}, {10.0, 1.0, 500}, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulated_annealing_seed(course, {}, {10.0, 0.95, 0}, rng),
                    std::invalid_argument);
}

TEST_CASE("seed_population honors the configured approach and evaluates everything") {
    Course course = test::sample_sub_course(6);
    GaConfig config;
    config.population_size = 20;
    config.hc_iterations = 40;

    for (InitApproach init :
         {InitApproach::Random, InitApproach::HillClimbing, InitApproach::SimulatedAnnealing}) {
        config.init = init;
        Rng rng = make_rng(7, RngStream::Seeding);
        const auto population = seed_population(course, config, rng);
        REQUIRE(population.size() == 20);
        for (const Individual& ind : population) {
            CHECK(is_permutation_of(ind.path, course.size()));
            CHECK(ind.fitness.value ==
                  evaluate(ind.path, course, config.fitness_params).value);
        }
    }
}

TEST_CASE("heuristic seeds score at least as well as random seeds on average") {
    Course course = test::sample_course();
    GaConfig config;
    config.population_size = 30;

    const auto mean_fitness = [&](InitApproach init, std::uint64_t seed) {
        config.init = init;
        Rng rng = make_rng(seed, RngStream::Seeding);
        const auto population = seed_population(course, config, rng);
        double total = 0.0;
        for (const Individual& ind : population) total += ind.fitness.value;
        return total / static_cast<double>(population.size());
    };

    const double random_mean = mean_fitness(InitApproach::Random, 3);
    CHECK(mean_fitness(InitApproach::HillClimbing, 3) >= random_mean);
    CHECK(mean_fitness(InitApproach::SimulatedAnnealing, 3) >= random_mean);
}

}  // TEST_SUITE
