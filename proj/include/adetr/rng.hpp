// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "numeric.hpp"

namespace adetr {

/// Deterministic seeded generator (splitmix64) for reproducible sampling.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    /// uniform integer in [lo, hi]
    long range(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }
    /// nonzero small rational with numerator in [-num, num], denominator in [1, den]
    Rat rat(long num, long den) {
        long n = 0;
        while (n == 0) n = range(-num, num);
        return frac(n, range(1, den));
    }
};

}  // namespace adetr
