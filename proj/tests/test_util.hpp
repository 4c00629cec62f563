#pragma once

#include <array>
#include <cstdint>

#include "delpezzo/e8.hpp"
#include "delpezzo/rational.hpp"

// Deterministic generator for property-style tests.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {   // inclusive
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};

inline delpezzo::EpsVector random_eps(SplitMix& rng, long long max_den) {
    std::array<delpezzo::Rat, 8> coords;
    long long den = rng.range(1, max_den);
    for (auto& c : coords) c = delpezzo::Rat(rng.range(-2 * max_den, 2 * max_den), den);
    return delpezzo::EpsVector::from_rats(coords);
}
