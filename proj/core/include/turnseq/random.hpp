#pragma once

#include <cstdint>
#include <random>

namespace turnseq {

// std::uniform_*_distribution output differs between standard libraries, so
// seeded results are derived from the raw engine words instead.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine word.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t word = rng();
    while (word >= limit) word = rng();
    return word % bound;
}

}  // namespace turnseq
