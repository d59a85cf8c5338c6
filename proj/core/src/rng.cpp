#include "vqebench/rng.hpp"

#include "vqebench/errors.hpp"

namespace vqebench {

std::vector<double> gaussian_init(int dim, double sigma, std::uint64_t seed) {
    if (dim < 1) throw ConfigError("gaussian_init: dim must be >= 1");
    if (sigma < 0.0) throw ConfigError("gaussian_init: sigma must be non-negative");
    Rng rng(seed);
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = rng.normal(0.0, sigma);
    return v;
}

}  // namespace vqebench
