#include "lpga/ga_config.hpp"

#include <stdexcept>

namespace lpga {

void validate(const GaConfig& config) {
    const auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (config.population_size < 1) fail("population_size must be >= 1");
    if (config.generations < 1) fail("generations must be >= 1");
    if (config.tournament_size < 1 || config.tournament_size > config.population_size) {
        fail("tournament_size must lie in [1, population_size]");
    }
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
        fail("crossover_rate must lie in [0, 1]");
    }
    if (!(config.mutation_rate >= 0.0 && config.mutation_rate <= 1.0)) {
        fail("mutation_rate must lie in [0, 1]");
    }
    if (config.elitism_count < 0 || config.elitism_count >= config.population_size) {
        fail("elitism_count must lie in [0, population_size)");
    }
    if (!(config.fitness_params.w >= 0.0 && config.fitness_params.w <= 1.0)) {
        fail("w must lie in [0, 1]");
    }
    if (config.hc_iterations < 1) fail("hc_iterations must be >= 1");
    if (!(config.sa_schedule.initial_temperature > 0.0)) {
        fail("sa initial_temperature must be > 0");
    }
    if (!(config.sa_schedule.cooling_factor > 0.0 && config.sa_schedule.cooling_factor < 1.0)) {
        fail("sa cooling_factor must lie in (0, 1)");
    }
    if (config.sa_schedule.steps_per_seed < 1) fail("sa steps_per_seed must be >= 1");
}

std::string to_string(SelectionPolicy v) {
    return v == SelectionPolicy::Tournament ? "tournament" : "roulette";
}

std::string to_string(CrossoverKind v) {
    return v == CrossoverKind::Pmx ? "pmx" : "cycle";
}

std::string to_string(InitApproach v) {
    switch (v) {
        case InitApproach::Random: return "random";
        case InitApproach::HillClimbing: return "hc";
        default: return "sa";
    }
}

std::string to_string(FitnessVariant v) {
    return v == FitnessVariant::Text ? "text" : "listing";
}

namespace {
[[noreturn]] void bad_name(const char* what, const std::string& name) {
    throw std::invalid_argument(std::string("unknown ") + what + " `" + name + "`");
}
}  // namespace

SelectionPolicy parse_selection(const std::string& name) {
    if (name == "tournament") return SelectionPolicy::Tournament;
    if (name == "roulette") return SelectionPolicy::Roulette;
    bad_name("selection policy", name);
}

CrossoverKind parse_crossover(const std::string& name) {
    if (name == "pmx") return CrossoverKind::Pmx;
    if (name == "cycle") return CrossoverKind::Cycle;
    bad_name("crossover", name);
}

InitApproach parse_init(const std::string& name) {
    if (name == "random") return InitApproach::Random;
    if (name == "hc") return InitApproach::HillClimbing;
    if (name == "sa") return InitApproach::SimulatedAnnealing;
    bad_name("init approach", name);
}

FitnessVariant parse_variant(const std::string& name) {
    if (name == "text") return FitnessVariant::Text;
    if (name == "listing") return FitnessVariant::Listing;
    bad_name("fitness variant", name);
}

}  // namespace lpga
