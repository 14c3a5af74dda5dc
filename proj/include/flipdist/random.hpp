#pragma once

// Seeded draws with fixed semantics. The standard distributions are
// implementation-defined, which would break cross-platform determinism.

#include <cstdint>
#include <limits>
#include <random>

namespace flipdist {

using Rng = std::mt19937_64;

/// Uniform in [0, bound), bound > 0.
inline std::uint64_t bounded(Rng& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace flipdist
