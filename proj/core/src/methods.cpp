#include "vqebench/methods.hpp"

#include <cmath>
#include <utility>

#include "vqebench/analysis.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"

namespace vqebench {

Method method_from_name(const std::string& name) {
    if (name == "standard") return Method::Standard;
    if (name == "local_global") return Method::LocalGlobal;
    if (name == "adiabatic") return Method::Adiabatic;
    if (name == "sea") return Method::Sea;
    if (name == "pretrained") return Method::Pretrained;
    throw ConfigError("unknown method '" + name +
                      "'; valid: standard, local_global, adiabatic, sea, pretrained");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Standard: return "standard";
        case Method::LocalGlobal: return "local_global";
        case Method::Adiabatic: return "adiabatic";
        case Method::Sea: return "sea";
        case Method::Pretrained: return "pretrained";
    }
    return "?";
}

std::vector<std::string> method_names() {
    return {"standard", "local_global", "adiabatic", "sea", "pretrained"};
}

Metrics compute_metrics(const Statevector& final_state, const ConvergenceTrace& trace,
                        const PauliSum& h, const GroundStateSolution& reference,
                        const std::vector<Statevector>& ground_basis) {
    Metrics m{};
    m.energy_error = std::abs(expectation(final_state, h) - reference.energy);
    if (ground_basis.empty()) {
        m.fidelity = fidelity(final_state, reference.state);
    } else {
        double f = 0.0;
        for (const auto& u : ground_basis) f += std::norm(inner_product(u, final_state));
        m.fidelity = f;
    }
    if (trace.energies.empty()) {
        m.stability = 0.0;
        m.stability_truncated = true;
    } else {
        m.stability = stability(trace, 20);
        m.stability_truncated = trace.energies.size() < 20;
    }
    return m;
}

Reference make_reference(const PauliSum& h, std::uint64_t seed) {
    LanczosOptions opt;
    opt.seed = seed;
    Reference ref{ground_state(h, opt), ground_space(h, 1e-8, opt)};
    return ref;
}

namespace {

/// Seed for the SPSA stream of a given stage; stages get independent
/// streams derived from the run seed.
std::uint64_t stage_seed(std::uint64_t run_seed, int stage) {
    return Rng(run_seed).split(0x53544147ULL + static_cast<std::uint64_t>(stage)).seed();
}

std::uint64_t init_seed(std::uint64_t run_seed) {
    return Rng(run_seed).split(0x494E4954ULL).seed();
}

struct Stage {
    const AnsatzCircuit* circuit;
    const PauliSum* objective_h;
    int iterations;
};

/// Run the staged SPSA pipeline, concatenating traces. `full_h` is the
/// target operator; energies_on_full_h re-evaluates each iterate on it
/// whenever a stage optimizes a different operator or circuit.
MethodResult run_stages(Method method, const PauliSum& full_h, const std::vector<Stage>& stages,
                        std::vector<double> theta0, const SpsaConfig& cfg,
                        const Reference* reference,
                        const AnsatzCircuit** final_circuit_out = nullptr) {
    ConvergenceTrace combined;
    std::vector<double> full_series;
    std::vector<int> boundaries;
    std::vector<double> theta = std::move(theta0);
    const AnsatzCircuit* last_circuit = nullptr;
    int done = 0;
    int total = 0;
    for (const auto& s : stages) total += s.iterations;

    for (std::size_t si = 0; si < stages.size(); ++si) {
        const Stage& st = stages[si];
        last_circuit = st.circuit;
        if (st.iterations == 0) continue;
        const bool same_operator = *st.objective_h == full_h;
        SpsaConfig stage_cfg = cfg;
        stage_cfg.max_iterations = st.iterations;
        stage_cfg.seed = stage_seed(cfg.seed, static_cast<int>(si));
        auto objective = [&](const std::vector<double>& p) {
            return st.circuit->energy(p, *st.objective_h);
        };
        IterationCallback observer;
        if (!same_operator) {
            observer = [&](int, const std::vector<double>& p, double) {
                full_series.push_back(st.circuit->energy(p, full_h));
            };
        } else {
            observer = [&](int, const std::vector<double>&, double e) {
                full_series.push_back(e);
            };
        }
        ConvergenceTrace t = spsa_minimize(objective, std::move(theta), stage_cfg, observer);
        combined.energies.insert(combined.energies.end(), t.energies.begin(), t.energies.end());
        combined.evaluations += t.evaluations;
        combined.wall_time_s += t.wall_time_s;
        theta = std::move(t.final_params);
        done += st.iterations;
        if (done > 0 && done < total) boundaries.push_back(done);
    }

    combined.final_params = theta;
    Statevector final_state = last_circuit->evaluate(theta);

    std::optional<Reference> local_ref;
    const Reference* ref = reference;
    if (!ref) {
        local_ref.emplace(make_reference(full_h));
        ref = &*local_ref;
    }
    const Metrics m =
        compute_metrics(final_state, combined, full_h, ref->solution, ref->ground_basis);

    if (final_circuit_out) *final_circuit_out = last_circuit;
    MethodResult result{method,
                        std::move(combined),
                        expectation(final_state, full_h),
                        m.energy_error,
                        m.fidelity,
                        m.stability,
                        m.stability_truncated,
                        std::move(boundaries),
                        std::move(full_series),
                        std::move(final_state),
                        ref->solution.energy};
    return result;
}

int stage1_iterations(double split, int budget) {
    if (!(split >= 0.0 && split <= 1.0))
        throw ConfigError("stage split must lie in [0, 1]");
    return static_cast<int>(std::lround(split * budget));
}

}  // namespace

MethodResult run_standard(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                          const MethodOptions& opts, const Reference* reference) {
    const AnsatzCircuit circuit = build_efficient_su2(h.n_qubits(), n_layers);
    auto theta0 = gaussian_init(circuit.n_params(), opts.init_sigma, init_seed(cfg.seed));
    return run_stages(Method::Standard, h, {{&circuit, &h, cfg.max_iterations}},
                      std::move(theta0), cfg, reference);
}

MethodResult run_local_global(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                              double split, const MethodOptions& opts,
                              const Reference* reference) {
    const PauliSum h_local = extract_local(h);
    if (h_local.size() == 0)
        throw ConfigError("run_local_global: no single-qubit or nearest-neighbor terms");
    const AnsatzCircuit circuit = build_efficient_su2(h.n_qubits(), n_layers);
    auto theta0 = gaussian_init(circuit.n_params(), opts.init_sigma, init_seed(cfg.seed));
    const int s1 = stage1_iterations(split, cfg.max_iterations);
    return run_stages(Method::LocalGlobal, h,
                      {{&circuit, &h_local, s1}, {&circuit, &h, cfg.max_iterations - s1}},
                      std::move(theta0), cfg, reference);
}

MethodResult run_adiabatic(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                           int n_steps, const MethodOptions& opts, const Reference* reference) {
    if (n_steps < 1) throw ConfigError("run_adiabatic: n_steps must be >= 1");
    const PauliSum h_local = extract_local(h);
    if (h_local.size() == 0)
        throw ConfigError("run_adiabatic: no single-qubit or nearest-neighbor terms");
    const AnsatzCircuit circuit = build_efficient_su2(h.n_qubits(), n_layers);
    auto theta0 = gaussian_init(circuit.n_params(), opts.init_sigma, init_seed(cfg.seed));

    // Uniform s-grid t/n_steps, t = 1..n_steps; the budget is distributed
    // evenly with the remainder given to the earliest steps.
    std::vector<PauliSum> interpolants;
    interpolants.reserve(static_cast<std::size_t>(n_steps));
    for (int t = 1; t <= n_steps; ++t)
        interpolants.push_back(interpolate(h_local, h, static_cast<double>(t) / n_steps));
    std::vector<Stage> stages;
    const int base = cfg.max_iterations / n_steps;
    const int extra = cfg.max_iterations % n_steps;
    for (int t = 0; t < n_steps; ++t)
        stages.push_back({&circuit, &interpolants[static_cast<std::size_t>(t)],
                          base + (t < extra ? 1 : 0)});
    return run_stages(Method::Adiabatic, h, stages, std::move(theta0), cfg, reference);
}

MethodResult run_sea(const PauliSum& h, int depth, const SpsaConfig& cfg,
                     const MethodOptions& opts, const Reference* reference) {
    return run_sea(h, SeaDepthConfig{depth, depth, depth}, cfg, opts, reference);
}

MethodResult run_sea(const PauliSum& h, const SeaDepthConfig& depths, const SpsaConfig& cfg,
                     const MethodOptions& opts, const Reference* reference) {
    const AnsatzCircuit circuit = build_sea(h.n_qubits(), depths);
    auto theta0 = gaussian_init(circuit.n_params(), opts.init_sigma, init_seed(cfg.seed));
    return run_stages(Method::Sea, h, {{&circuit, &h, cfg.max_iterations}}, std::move(theta0),
                      cfg, reference);
}

MethodResult run_pretrained(const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                            double split, const MethodOptions& opts,
                            const Reference* reference) {
    const AnsatzCircuit mps = build_mps(h.n_qubits(), 2);
    const AnsatzCircuit full = build_efficient_su2(h.n_qubits(), n_layers);
    const int s1 = stage1_iterations(split, cfg.max_iterations);
    const int s2 = cfg.max_iterations - s1;

    auto theta_mps = gaussian_init(mps.n_params(), opts.init_sigma, init_seed(cfg.seed));
    if (s2 == 0) {
        // Degenerate split: report the MPS-stage optimum through the MPS
        // circuit itself.
        return run_stages(Method::Pretrained, h, {{&mps, &h, s1}}, std::move(theta_mps), cfg,
                          reference);
    }
    SpsaConfig cfg1 = cfg;
    cfg1.max_iterations = s1;
    cfg1.seed = stage_seed(cfg.seed, 0);
    ConvergenceTrace t1 = spsa_minimize(
        [&](const std::vector<double>& p) { return mps.energy(p, h); }, std::move(theta_mps),
        cfg1);

    // Transfer: optimized MPS parameters fill the first min(d_mps, d_full)
    // slots; the remainder is drawn from N(0, init_sigma).
    const auto d_full = static_cast<std::size_t>(full.n_params());
    const std::size_t d_copy = std::min(t1.final_params.size(), d_full);
    std::vector<double> theta_full =
        gaussian_init(full.n_params(), opts.init_sigma,
                      Rng(cfg.seed).split(0x46494C4CULL).seed());
    for (std::size_t i = 0; i < d_copy; ++i) theta_full[i] = t1.final_params[i];

    SpsaConfig cfg2 = cfg;
    cfg2.seed = Rng(cfg.seed).split(0x5032ULL).seed();  // distinct stage-2 stream
    std::vector<Stage> stage2{{&full, &h, s2}};
    MethodResult result =
        run_stages(Method::Pretrained, h, stage2, std::move(theta_full), cfg2, reference);

    // Prepend the MPS-stage history; its energies are already on the full
    // Hamiltonian (stage 1 optimizes h through the MPS circuit).
    result.trace.energies.insert(result.trace.energies.begin(), t1.energies.begin(),
                                 t1.energies.end());
    result.energies_on_full_h.insert(result.energies_on_full_h.begin(), t1.energies.begin(),
                                     t1.energies.end());
    result.trace.evaluations += t1.evaluations;
    result.trace.wall_time_s += t1.wall_time_s;
    result.stage_boundaries.clear();
    if (s1 > 0 && s2 > 0) result.stage_boundaries.push_back(s1);
    // Stability is defined over the concatenated trace tail; stage 2 is
    // non-empty here, so the metric is unchanged.
    return result;
}

MethodResult run_method(Method method, const PauliSum& h, int n_layers, const SpsaConfig& cfg,
                        const MethodOptions& opts, const Reference* reference) {
    switch (method) {
        case Method::Standard: return run_standard(h, n_layers, cfg, opts, reference);
        case Method::LocalGlobal:
            return run_local_global(h, n_layers, cfg, opts.stage_split, opts, reference);
        case Method::Adiabatic:
            return run_adiabatic(h, n_layers, cfg, opts.adiabatic_steps, opts, reference);
        case Method::Sea: return run_sea(h, n_layers, cfg, opts, reference);
        case Method::Pretrained:
            return run_pretrained(h, n_layers, cfg, opts.stage_split, opts, reference);
    }
    throw ConfigError("run_method: invalid method");
}

}  // namespace vqebench
