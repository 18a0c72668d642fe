#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>

namespace r3d {

/// All randomness in the project is drawn from this engine, seeded by one 64-bit value.
/// Its output sequence is fixed by the standard, unlike the std distributions.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling; identical on every platform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

/// Fisher-Yates with uniform_below, so shuffles are reproducible across standard libraries.
template <typename T>
void portable_shuffle(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

}  // namespace r3d
