#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qsc {

// Seeding and sampling avoid the standard distribution objects so that
// identical seeds give identical draws on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

/// Independent generator for one (label, step) pair of a run.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t label, std::uint64_t step) {
    return std::mt19937_64(mix_seed(mix_seed(seed, label), step));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Index sampled from an unnormalized weight vector by CDF inversion.
inline std::size_t sample_categorical(std::span<const double> weights, std::mt19937_64& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform01(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (r < acc) return i;
    }
    return weights.size() - 1;
}

/// Poisson draw by inversion of exponential interarrivals, chunked so
/// that exp(-mean) never underflows.
inline std::int64_t sample_poisson(double mean, std::mt19937_64& rng) {
    std::int64_t total = 0;
    while (mean > 0.0) {
        double chunk = mean > 400.0 ? 400.0 : mean;
        mean -= chunk;
        double limit = std::exp(-chunk);
        double prod = uniform01(rng);
        std::int64_t k = 0;
        while (prod >= limit) {
            prod *= uniform01(rng);
            ++k;
        }
        total += k;
    }
    return total;
}

}  // namespace qsc
