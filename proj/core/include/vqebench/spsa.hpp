#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace vqebench {

/// SPSA hyperparameters with the power-law schedules
///   alpha_k = a / (k + 1 + A)^alpha,   c_k = c / (k + 1)^gamma.
struct SpsaConfig {
    double a = 0.1;
    double c = 0.1;
    double A = 0.0;
    double alpha = 0.602;
    double gamma = 0.101;
    int max_iterations = 1000;
    std::uint64_t seed = 42;
    /// Record E(theta_k) each iteration (one extra evaluation); when off,
    /// the trace reuses the E+ sample instead.
    bool record_trace = true;

    /// Throws ConfigError when outside the supported ranges.
    void validate() const;
};

/// Standard calibration: a = c = 0.1, A = 0, alpha = 0.602, gamma = 0.101,
/// 1000 iterations, seed 42.
SpsaConfig default_spsa_config();

/// Per-iteration history of one optimization run.
struct ConvergenceTrace {
    std::vector<double> energies;      // one entry per executed iteration
    std::vector<double> final_params;
    double wall_time_s = 0.0;
    long evaluations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Observer invoked once per iteration with (k, theta_k, trace energy).
/// Purely observational; does not influence the optimization stream.
using IterationCallback =
    std::function<void(int, const std::vector<double>&, double)>;

double spsa_step_size(const SpsaConfig& cfg, int k);
double spsa_perturbation(const SpsaConfig& cfg, int k);

/// Minimize the objective with simultaneous-perturbation gradient
/// estimates. The trace is a pure function of (objective, theta0, cfg);
/// identical inputs give bit-identical traces. A zero iteration budget
/// returns theta0 with an empty energy history.
ConvergenceTrace spsa_minimize(const Objective& objective,
                               std::vector<double> theta0,
                               const SpsaConfig& cfg,
                               const IterationCallback& on_iteration = {});

}  // namespace vqebench
