#pragma once

#include <cstdint>

namespace blockdim {

// splitmix64 (Steele, Lea, Flood 2014). The single PRNG behind every seeded
// generator; the constants are part of the file-format contract so other
// implementations can reproduce identical streams.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 2^53): the draw compared against probability thresholds.
    std::uint64_t next53() { return next() >> 11; }

    double next_unit() { return static_cast<double>(next53()) * 0x1.0p-53; }

    // Uniform on [0, bound); modulo bias is fine for test-data generation.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace blockdim
