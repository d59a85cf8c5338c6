#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace vqebench {

/// Counter-based pseudo-random generator built on the SplitMix64 mixing
/// function. Every draw is a pure function of (seed, counter), and
/// split() derives independent sub-streams, so results never depend on
/// evaluation order across streams. The algorithm identifier below is
/// recorded in run manifests; streams are part of the reproducibility
/// contract of this artifact.
class Rng {
public:
    static constexpr const char* kAlgorithmId = "splitmix64-boxmuller-v1";

    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + counter_ * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
        ++counter_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (cosine branch only).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// +1 or -1 with equal probability.
    int rademacher() { return (next_u64() >> 63) ? 1 : -1; }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Derive an independent sub-stream. Splitting does not advance this
    /// generator's counter.
    Rng split(std::uint64_t stream) const {
        std::uint64_t z = seed_ ^ (stream + 0xD1B54A32D192ED03ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Seeded i.i.d. normal vector, mean 0, standard deviation sigma.
std::vector<double> gaussian_init(int dim, double sigma, std::uint64_t seed);

}  // namespace vqebench
