#pragma once

#include <cstdint>

#include "treebij/trees.hpp"

namespace treebij {

// SplitMix64 (Steele, Lea, Flood). Chosen as the samplers' generator because
// the whole algorithm fits in three lines and ports bit-for-bit to any
// language with 64-bit unsigned arithmetic.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), unbiased via rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

private:
    std::uint64_t state_;
};

// Uniform over T_n. Draw order: the n-2 Prufer digits (each a label index in
// [0, n)), then r1, r2, r3.
TriplyRootedTree sample_triply_rooted(int n, std::uint64_t seed);

// Uniform over functions [n+1] -> [n]. Draw order: values of 1, 2, ..., n+1.
FiniteFunction sample_function(int n, std::uint64_t seed);

} // namespace treebij
