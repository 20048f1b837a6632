#pragma once

#include <cstdint>

#include "antider/complexhp.hpp"
#include "antider/precision.hpp"

namespace antider {

// splitmix64: tiny, fully deterministic, platform-independent.  All sampling
// in the toolkit flows through this so that a (config, seed) pair pins every
// random draw exactly.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits, materialized exactly in Real.
    Real uniform01() {
        const std::uint64_t u = next() >> 11;
        return Real(u) / Real(9007199254740992ULL); // 2^53
    }

    Real uniform(const Real& lo, const Real& hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Independent substream for (seed, a, b): lets parallel loops draw their
// cell's samples without sharing a sequential generator.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 g(seed);
    std::uint64_t s = g.next();
    s ^= 0x9E3779B97F4A7C15ULL * (a + 1);
    SplitMix64 h(s);
    std::uint64_t t = h.next() ^ (0xD1B54A32D192ED03ULL * (b + 1));
    return SplitMix64(t);
}

} // namespace antider
