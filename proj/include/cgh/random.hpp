#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cgh/core.hpp"

namespace cgh {

/// All stochastic code draws from a 64-bit Mersenne Twister. Distributions are
/// implemented here rather than through <random> so that streams are
/// bit-for-bit identical across standard libraries.
using Rng = std::mt19937_64;

/// splitmix64 finalizer over (master, index): an independent stream per instance.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

/// Each r-subset of {0..n-1}, visited in lexicographic order, is kept
/// independently with probability p (one uniform01 draw per subset).
inline Cgh random_cgh(std::size_t n, std::size_t r, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const Edge& e) {
        if (uniform01(rng) < p) edges.push_back(e);
    });
    return Cgh(CyclicGround(n), r, std::move(edges));
}

inline Cgh random_cgh(std::size_t n, std::size_t r, double p, std::uint64_t seed) {
    Rng rng(seed);
    return random_cgh(n, r, p, rng);
}

}  // namespace cgh
