#pragma once

#include <cstdint>
#include <random>

namespace lpga {

/// Every stochastic choice in a run flows from generators of this type,
/// derived from the run's single 64-bit seed.
using Rng = std::mt19937_64;

/// Independent per-purpose streams derived from one run seed. Keeping seeding
/// and evolution on separate streams means two runs that differ only in the
/// init approach share every draw the evolution loop makes.
enum class RngStream : std::uint64_t {
    Seeding = 1,
    Evolve = 2,
};

/// splitmix64 of (seed, stream); a cheap, well-mixed seed derivation.
constexpr std::uint64_t mix_seed(std::uint64_t seed, RngStream stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(stream);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, RngStream stream) {
    return Rng(mix_seed(seed, stream));
}

}  // namespace lpga
