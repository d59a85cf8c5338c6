#include "vqebench/spsa.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"

namespace vqebench {

void SpsaConfig::validate() const {
    if (!(a > 0.0)) throw ConfigError("SpsaConfig: a must be > 0");
    if (!(c > 0.0)) throw ConfigError("SpsaConfig: c must be > 0");
    if (!(A >= 0.0)) throw ConfigError("SpsaConfig: A must be >= 0");
    if (!(alpha > 0.5 && alpha <= 1.0)) throw ConfigError("SpsaConfig: alpha must lie in (0.5, 1]");
    if (!(gamma > 0.0 && gamma <= 0.5)) throw ConfigError("SpsaConfig: gamma must lie in (0, 0.5]");
    if (max_iterations < 0) throw ConfigError("SpsaConfig: negative iteration budget");
}

SpsaConfig default_spsa_config() { return SpsaConfig{}; }

double spsa_step_size(const SpsaConfig& cfg, int k) {
    return cfg.a / std::pow(k + 1 + cfg.A, cfg.alpha);
}

double spsa_perturbation(const SpsaConfig& cfg, int k) {
    return cfg.c / std::pow(k + 1, cfg.gamma);
}

ConvergenceTrace spsa_minimize(const Objective& objective, std::vector<double> theta0,
                               const SpsaConfig& cfg, const IterationCallback& on_iteration) {
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();
    const std::size_t dim = theta0.size();
    ConvergenceTrace trace;
    trace.energies.reserve(static_cast<std::size_t>(cfg.max_iterations));

    Rng rng = Rng(cfg.seed).split(0x5053415F3144ULL);  // SPSA perturbation stream
    std::vector<double> theta = std::move(theta0);
    std::vector<double> plus(dim), minus(dim);
    std::vector<int> delta(dim);

    auto eval = [&](const std::vector<double>& x, int k) {
        const double e = objective(x);
        ++trace.evaluations;
        if (!std::isfinite(e))
            throw NumericalError("spsa_minimize: non-finite objective at iteration " +
                                 std::to_string(k));
        return e;
    };

    for (int k = 0; k < cfg.max_iterations; ++k) {
        const double ak = spsa_step_size(cfg, k);
        const double ck = spsa_perturbation(cfg, k);
        for (std::size_t j = 0; j < dim; ++j) delta[j] = rng.rademacher();
        for (std::size_t j = 0; j < dim; ++j) {
            plus[j] = theta[j] + ck * delta[j];
            minus[j] = theta[j] - ck * delta[j];
        }
        const double e_plus = eval(plus, k);
        const double e_minus = eval(minus, k);
        const double e_k = cfg.record_trace ? eval(theta, k) : e_plus;
        trace.energies.push_back(e_k);
        if (on_iteration) on_iteration(k, theta, e_k);
        const double diff = (e_plus - e_minus) / (2.0 * ck);
        for (std::size_t j = 0; j < dim; ++j) theta[j] -= ak * diff / delta[j];
    }

    trace.final_params = std::move(theta);
    trace.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return trace;
}

}  // namespace vqebench
