#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vqebench/ansatz.hpp"
#include "vqebench/ground_state.hpp"
#include "vqebench/pauli.hpp"
#include "vqebench/spsa.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

enum class Method { Standard, LocalGlobal, Adiabatic, Sea, Pretrained };

Method method_from_name(const std::string& name);
std::string method_name(Method m);
std::vector<std::string> method_names();

/// Per-method knobs beyond the shared SPSA configuration.
struct MethodOptions {
    /// Fraction of the iteration budget spent in stage 1 (Local-Global,
    /// Pretrained).
    double stage_split = 0.5;
    /// Number of interpolation steps for the Adiabatic schedule
    /// (uniform s-grid t/n_steps, t = 1..n_steps).
    int adiabatic_steps = 5;
    /// Initialization spread for theta_0 and for Pretrained fill-in.
    double init_sigma = 0.01;
    /// SEA section depths for convergence runs. The depth-scaled [L, L, L]
    /// form is only used by gradient-variance scans.
};

/// Outcome of one end-to-end optimization run.
struct MethodResult {
    Method method;
    ConvergenceTrace trace;       // concatenated over stages
    double final_energy;          // on the full Hamiltonian
    double energy_error;          // |final_energy - reference energy|
    double fidelity;              // vs the (possibly degenerate) ground space
    double stability;             // std dev of the final 20 trace energies
    bool stability_truncated;     // trace shorter than the window
    std::vector<int> stage_boundaries;
    /// Stage-2+ energies re-evaluated on the full Hamiltonian when the
    /// optimizer saw a different operator (Adiabatic, Local-Global stage 1).
    std::vector<double> energies_on_full_h;
    Statevector final_state;
    double reference_energy;
};

struct Metrics {
    double energy_error;
    double fidelity;
    double stability;
    bool stability_truncated;
};

/// Energy error, fidelity, and trace stability against the reference.
/// Fidelity against a degenerate ground space is the squared norm of the
/// projection onto the span of `ground_basis` (falls back to the single
/// reference state when the basis is empty).
Metrics compute_metrics(const Statevector& final_state, const ConvergenceTrace& trace,
                        const PauliSum& h, const GroundStateSolution& reference,
                        const std::vector<Statevector>& ground_basis = {});

/// Precomputed reference shared across runs on the same Hamiltonian.
struct Reference {
    GroundStateSolution solution;
    std::vector<Statevector> ground_basis;
};
Reference make_reference(const PauliSum& h, std::uint64_t seed = 42);

MethodResult run_standard(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                          const MethodOptions& opts = {},
                          const Reference* reference = nullptr);
MethodResult run_local_global(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                              double split = 0.5, const MethodOptions& opts = {},
                              const Reference* reference = nullptr);
MethodResult run_adiabatic(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                           int n_steps = 5, const MethodOptions& opts = {},
                           const Reference* reference = nullptr);
MethodResult run_sea(const PauliSum& h, const SeaDepthConfig& depths, const SpsaConfig& cfg,
                     const MethodOptions& opts = {},
                     const Reference* reference = nullptr);
/// Uniform section depths [depth, depth, depth].
MethodResult run_sea(const PauliSum& h, int depth, const SpsaConfig& cfg,
                     const MethodOptions& opts = {},
                     const Reference* reference = nullptr);
MethodResult run_pretrained(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                            double split = 0.5, const MethodOptions& opts = {},
                            const Reference* reference = nullptr);

/// Dispatch by method enum with the knobs in `opts`.
MethodResult run_method(Method method, const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                        const MethodOptions& opts = {},
                        const Reference* reference = nullptr);

}  // namespace vqebench
