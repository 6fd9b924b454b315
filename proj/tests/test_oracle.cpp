#include <doctest.h>

#include <algorithm>

#include "lpga/oracle.hpp"
#include "test_util.hpp"

using namespace lpga;

TEST_SUITE("oracle") {

TEST_CASE("a single concept has exactly one path") {
    auto concepts = test::sample_concepts();
    concepts.resize(1);
    Course course(std::move(concepts), RelationDegreeMatrix(1, {0.0}));
    const OracleResult result = exhaustive_best(course, {});
    CHECK(result.best_path == LearningPath{0});
    CHECK(result.best_fitness == 0.0);
    CHECK(result.evaluated_count == 1);
}

TEST_CASE("two concepts reduce to comparing the two orders") {
    Course course = test::sample_sub_course(2);
    const FitnessParams params{};
    const OracleResult result = exhaustive_best(course, params);
    const double forward = evaluate({0, 1}, course, params).value;
    const double backward = evaluate({1, 0}, course, params).value;
    CHECK(result.evaluated_count == 2);
    CHECK(result.best_fitness == std::max(forward, backward));
    CHECK(result.best_path == (forward >= backward ? LearningPath{0, 1} : LearningPath{1, 0}));
}

TEST_CASE("the oracle dominates every explicit candidate") {
    Course course = test::sample_sub_course(6);
    const FitnessParams params{0.73, FitnessVariant::Text};
    const OracleResult result = exhaustive_best(course, params);
    CHECK(result.evaluated_count == 720);
    CHECK(evaluate(result.best_path, course, params).value == result.best_fitness);

    std::mt19937_64 rng(3);
    LearningPath path = traditional_path(course);
    for (int trial = 0; trial < 200; ++trial) {
        std::shuffle(path.begin(), path.end(), rng);
        CHECK(evaluate(path, course, params).value <= result.best_fitness);
    }
}

TEST_CASE("ties resolve to the lexicographically smallest path") {
    // Uniform concepts and a constant matrix make every path score the same.
    std::vector<Concept> concepts;
    for (int i = 0; i < 4; ++i) concepts.push_back({i, "c", 1.0, 2.0, 4.0});
    std::vector<double> values(16, 0.5);
    Course course(std::move(concepts), RelationDegreeMatrix(4, std::move(values)));
    const OracleResult result = exhaustive_best(course, {});
    CHECK(result.best_path == LearningPath{0, 1, 2, 3});
    CHECK(result.evaluated_count == 24);
}

TEST_CASE("repeated calls return identical results") {
    Course course = test::sample_sub_course(7);
    const OracleResult a = exhaustive_best(course, {});
    const OracleResult b = exhaustive_best(course, {});
    CHECK(a.best_path == b.best_path);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.evaluated_count == 5040);
}

TEST_CASE("courses beyond the cap are refused") {
    Course course = test::sample_course();
    REQUIRE(course.size() > max_oracle_concepts);
    CHECK_THROWS_AS(exhaustive_best(course, {}), std::invalid_argument);
}

}  // TEST_SUITE
