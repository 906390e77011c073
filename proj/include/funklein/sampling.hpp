#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "funklein/geometry.hpp"

// Seeded sample generators shared by the check suites and the tests.
// Deterministic for a fixed seed.

namespace funklein {

struct SampleSet {
    std::vector<std::pair<Vec2, Vec2>> items; // (x, xi)
};

// Uniform points in the disc of radius `rmax` about `center` (area-uniform),
// with directions uniform on the circle and magnitudes in [mag_lo, mag_hi].
inline SampleSet sample_disc(std::uint64_t seed, std::size_t count, double rmax,
                             Vec2 center = {0.0, 0.0}, double mag_lo = 0.5,
                             double mag_hi = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SampleSet out;
    out.items.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double th = 2.0 * std::numbers::pi * unit(rng);
        const double rad = rmax * std::sqrt(unit(rng));
        const double ph = 2.0 * std::numbers::pi * unit(rng);
        const double mag = mag_lo + (mag_hi - mag_lo) * unit(rng);
        out.items.push_back({center + Vec2{std::cos(th), std::sin(th)} * rad,
                             Vec2{std::cos(ph), std::sin(ph)} * mag});
    }
    return out;
}

// Independent point pairs in the same disc.
inline std::vector<std::pair<Vec2, Vec2>> sample_point_pairs(std::uint64_t seed,
                                                             std::size_t count,
                                                             double rmax,
                                                             Vec2 center = {0.0, 0.0}) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<Vec2, Vec2>> out;
    out.reserve(count);
    auto draw = [&]() {
        const double th = 2.0 * std::numbers::pi * unit(rng);
        const double rad = rmax * std::sqrt(unit(rng));
        return center + Vec2{std::cos(th), std::sin(th)} * rad;
    };
    for (std::size_t i = 0; i < count; ++i) {
        const Vec2 a = draw();
        const Vec2 b = draw();
        out.push_back({a, b});
    }
    return out;
}

} // namespace funklein
