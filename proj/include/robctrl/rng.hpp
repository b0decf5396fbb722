#pragma once

#include <cstdint>
#include <random>

namespace robctrl {

// Single RNG type used everywhere so a (config, seed) pair pins a run.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

// Derives an independent stream, e.g. one per generated row or per agent.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{seed, stream ^ 0x9e3779b97f4a7c15ull};
    return Rng{seq};
}

}  // namespace robctrl
