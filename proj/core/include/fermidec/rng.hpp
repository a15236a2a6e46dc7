#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace fermidec {

// splitmix64: tiny, seed-stable across platforms, and cheap to key per stream,
// which keeps parallel Monte Carlo output independent of the thread count.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Strictly inside (0, 1), safe for log and the Box-Muller angle.
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    void normal_pair(double& z0, double& z1) {
        const double radius = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        z0 = radius * std::cos(angle);
        z1 = radius * std::sin(angle);
    }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Distinct, well-separated generator per (seed, stream) pair.
inline SplitMix64 rng_stream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64{mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1))};
}

}  // namespace fermidec
