#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wsicl {

// Deterministic RNG utilities. The engine is std::mt19937_64 (its output
// sequence is pinned by the standard); the distributions below are
// hand-rolled from raw 64-bit draws so results do not depend on the
// standard library's distribution implementations.

using Rng = std::mt19937_64;

/// splitmix64 step; used to derive independent seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic seed for a sub-stream, e.g. (family_seed, sample_index).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base ^ 0x5851F42D4C957F2DULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Uniform index in [0, n). n must be >= 1.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    // 128-bit multiply trick; bias is < n / 2^64, negligible for any n here.
    return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(hi - lo + 1)));
}

/// Standard normal via Box-Muller (stateless, no cached spare).
inline double normal(Rng& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

}  // namespace wsicl
