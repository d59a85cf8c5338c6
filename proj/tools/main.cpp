// Command-line entry point for the VQE barren-plateau benchmarking toolkit.
//
// Subcommands: ground-state, run, grad-scan, landscape, campaign, report.
// Exit codes: 0 success, 1 numerical/convergence failure, 2 usage/config
// error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "vqebench/analysis.hpp"
#include "vqebench/campaign.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/ground_state.hpp"
#include "vqebench/io.hpp"
#include "vqebench/methods.hpp"
#include "vqebench/rng.hpp"
#include "vqebench/version.hpp"

namespace fs = std::filesystem;
using namespace vqebench;

namespace {

std::string default_output_dir() {
    if (const char* env = std::getenv("VQEBENCH_OUTPUT_DIR")) return env;
    return ".";
}

std::string molecule_name(const std::string& path) {
    return fs::path(path).stem().string();
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AnsatzCircuit circuit_for_method(const std::string& method, int n_qubits, int layers) {
    if (method == "sea") return build_sea(n_qubits, {layers, layers, layers});
    if (method == "mps") return build_mps(n_qubits, 2);
    return build_efficient_su2(n_qubits, layers);
}

int cmd_ground_state(const std::string& ham_path, const std::string& output,
                     std::uint64_t seed, bool text_format) {
    const PauliSum h = parse_hamiltonian_file(ham_path);
    LanczosOptions opt;
    opt.seed = seed;
    const GroundStateSolution sol = ground_state(h, opt);
    std::printf("ground-state energy: %.9f Ha (residual %.3e)\n", sol.energy,
                sol.residual_norm);
    fs::create_directories(output);
    const fs::path state_path =
        fs::path(output) / (molecule_name(ham_path) + (text_format ? ".state.txt" : ".state.bin"));
    if (text_format)
        write_statevector_text(state_path.string(), sol.state);
    else
        write_statevector_binary(state_path.string(), sol.state);
    std::printf("state written to %s\n", state_path.string().c_str());
    return 0;
}

int cmd_run(const std::string& ham_path, const std::string& method, int layers, int iterations,
            std::uint64_t seed, double split, int adiabatic_steps, const std::string& output) {
    const auto t0 = std::chrono::steady_clock::now();
    const PauliSum h = parse_hamiltonian_file(ham_path);
    SpsaConfig cfg = default_spsa_config();
    cfg.max_iterations = iterations;
    cfg.seed = seed;
    MethodOptions opts;
    opts.stage_split = split;
    opts.adiabatic_steps = adiabatic_steps;
    const MethodResult res = run_method(method_from_name(method), h, layers, cfg, opts);

    fs::create_directories(output);
    const std::string mol = molecule_name(ham_path);
    const std::string base =
        mol + "_" + method + "_" + std::to_string(layers) + "L_" + std::to_string(seed);
    write_method_result_json((fs::path(output) / (base + ".json")).string(), mol, layers, seed,
                             res);
    write_trace_csv((fs::path(output) / (base + ".csv")).string(), res.trace.energies);
    nlohmann::ordered_json cfg_json{{"hamiltonian", ham_path}, {"method", method},
                                    {"layers", layers},        {"iterations", iterations},
                                    {"seed", seed},            {"split", split},
                                    {"adiabatic_steps", adiabatic_steps}};
    write_run_manifest((fs::path(output) / (base + ".manifest.json")).string(), "run",
                       cfg_json.dump(), elapsed_s(t0));
    std::printf("%s %s: E = %.9f Ha, dE = %.6e Ha, F = %.6f, stability = %.6e\n", mol.c_str(),
                method.c_str(), res.final_energy, res.energy_error, res.fidelity, res.stability);
    return 0;
}

int cmd_grad_scan(const std::string& ham_path, const std::string& method,
                  std::vector<int> depths, int samples, double epsilon, int subsample, int jobs,
                  std::uint64_t seed, const std::string& output) {
    if (samples < 5)
        std::fprintf(stderr, "warning: only %d samples; variance estimates will be coarse\n",
                     samples);
    const PauliSum h = parse_hamiltonian_file(ham_path);
    GradientScanOptions opts;
    opts.epsilon = epsilon;
    opts.component_subsample = subsample;
    opts.jobs = jobs;
    DepthBuilder builder = [&](int depth) { return circuit_for_method(method, h.n_qubits(), depth); };
    const auto stats = gradient_scan(builder, h, depths, samples, seed, opts);

    fs::create_directories(output);
    const std::string mol = molecule_name(ham_path);
    const fs::path csv = fs::path(output) / (mol + "_" + method + "_gradstats.csv");
    write_gradient_stats_csv(csv.string(), stats);
    for (const auto& s : stats)
        std::printf("depth %3d: mean |grad| = %.6e, Var = %.6e (n=%d)\n", s.depth, s.mean_norm,
                    s.variance_of_norms, s.sample_count);
    const auto cls = classify(stats.front(), stats.back());
    std::printf("variance ratio (L=%d / L=%d): %.6f -> %s\n", stats.back().depth,
                stats.front().depth, cls.ratio, to_string(cls.label).c_str());
    return 0;
}

int cmd_landscape(const std::string& ham_path, const std::string& method, int layers,
                  const std::string& center_file, double range, int resolution,
                  const std::string& mode, std::uint64_t seed, int jobs,
                  const std::string& output, bool heatmap) {
    if (range == 0.0) std::fprintf(stderr, "warning: --range 0 gives a degenerate grid\n");
    const PauliSum h = parse_hamiltonian_file(ham_path);
    const AnsatzCircuit circuit = circuit_for_method(method, h.n_qubits(), layers);

    std::vector<double> center(static_cast<std::size_t>(circuit.n_params()), 0.0);
    if (!center_file.empty()) {
        std::ifstream in(center_file);
        if (!in) throw ConfigError("cannot open center file: " + center_file);
        nlohmann::json j = nlohmann::json::parse(in);
        std::vector<double> params = j.value("final_params", std::vector<double>{});
        if (static_cast<int>(params.size()) != circuit.n_params())
            throw ConfigError("center vector dimension " + std::to_string(params.size()) +
                              " does not match ansatz dimension " +
                              std::to_string(circuit.n_params()));
        center = std::move(params);
    }

    const DirectionMode dir_mode = (mode == "random_orthonormal")
                                       ? DirectionMode::RandomOrthonormal
                                       : DirectionMode::FirstTwoCoords;
    const auto grid = landscape_scan(circuit, h, center, range, resolution, dir_mode, seed, jobs);

    fs::create_directories(output);
    const std::string mol = molecule_name(ham_path);
    const fs::path csv = fs::path(output) / (mol + "_" + method + "_landscape.csv");
    write_landscape_csv(csv.string(), grid);
    if (heatmap) {
        const fs::path svg = fs::path(output) / (mol + "_" + method + "_landscape.svg");
        write_heatmap_svg(svg.string(), grid);
    }

    // Center-cell consistency check (exact for odd resolutions).
    const double center_energy = circuit.energy(center, h);
    const int mid = resolution / 2;
    const double cell = grid.at(mid, mid);
    const bool odd = resolution % 2 == 1;
    std::printf("grid %dx%d over +/-%g rad, center cell %.9f vs E(center) %.9f (%s)\n",
                resolution, resolution, range, cell, center_energy,
                odd ? (std::abs(cell - center_energy) < 1e-10 ? "consistent" : "INCONSISTENT")
                    : "even resolution, interpolation bound applies");
    if (odd && std::abs(cell - center_energy) > 1e-10)
        throw NumericalError("landscape center-cell consistency violated");
    return 0;
}

int cmd_campaign(const std::string& config_path, const std::string& output_override, int jobs) {
    CampaignConfig cfg = CampaignConfig::from_json_file(config_path);
    if (!output_override.empty()) cfg.output_dir = output_override;
    if (jobs > 0) cfg.jobs = jobs;
    const CampaignReport report = run_campaign(cfg);
    int failed = 0;
    for (const auto& r : report.rows) {
        std::printf("%-12s %-14s %s\n", r.molecule.c_str(), r.method.c_str(),
                    r.ok ? "ok" : ("FAILED: " + r.error).c_str());
        if (!r.ok) ++failed;
    }
    std::printf("report written to %s/report.txt\n", cfg.output_dir.c_str());
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"VQE barren-plateau mitigation benchmark"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.set_version_flag("--version", std::string("vqebench ") + kVersion + " (rng: " +
                                          Rng::kAlgorithmId + ")");

    std::string ham_path, method = "standard", output = default_output_dir();
    std::string center_file, mode = "first_two_coords", campaign_config;
    std::uint64_t seed = 42;
    int layers = 30, iterations = 1000, samples = 100, subsample = 0, resolution = 100;
    int adiabatic_steps = 5;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    double split = 0.5, epsilon = 1e-4, range = 0.4;
    std::vector<int> depths = {1, 2, 5, 10, 20, 50};
    bool text_state = false, heatmap = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "random seed (default 42)");
        sub->add_option("--output", output, "output directory");
    };

    auto* gs = app.add_subcommand("ground-state", "exact reference energy via Lanczos");
    gs->add_option("--hamiltonian", ham_path, "Pauli-sum Hamiltonian file")->required();
    gs->add_flag("--text", text_state, "write the state as text instead of binary");
    add_common(gs);

    auto* run = app.add_subcommand("run", "one optimization run of a VQE method");
    run->add_option("--hamiltonian", ham_path)->required();
    run->add_option("--method", method, "standard|local_global|adiabatic|sea|pretrained");
    run->add_option("--layers", layers, "ansatz depth (default 30)");
    run->add_option("--iterations", iterations, "SPSA budget (default 1000)");
    run->add_option("--split", split, "stage-1 budget fraction (local_global, pretrained)");
    run->add_option("--adiabatic-steps", adiabatic_steps, "interpolation steps");
    add_common(run);

    auto* grad = app.add_subcommand("grad-scan", "gradient-variance scaling analysis");
    grad->add_option("--hamiltonian", ham_path)->required();
    grad->add_option("--method", method, "ansatz family to scan");
    grad->add_option("--depths", depths, "depth list")->delimiter(',');
    grad->add_option("--samples", samples, "parameter samples per depth (default 100)");
    grad->add_option("--epsilon", epsilon, "finite-difference step (default 1e-4)");
    grad->add_option("--subsample", subsample, "gradient components per sample (0 = all)");
    grad->add_option("--jobs", jobs, "worker threads");
    add_common(grad);

    auto* land = app.add_subcommand("landscape", "2-D energy landscape scan");
    land->add_option("--hamiltonian", ham_path)->required();
    land->add_option("--method", method, "ansatz family");
    land->add_option("--layers", layers);
    land->add_option("--center", center_file, "run result JSON holding final_params (default 0)");
    land->add_option("--range", range, "half range in radians (default 0.4)");
    land->add_option("--resolution", resolution, "grid points per axis (default 100)");
    land->add_option("--mode", mode, "first_two_coords|random_orthonormal");
    land->add_flag("--heatmap", heatmap, "also write a monochrome SVG heatmap");
    land->add_option("--jobs", jobs);
    add_common(land);

    auto* camp = app.add_subcommand("campaign", "run a full molecule x method campaign");
    camp->add_option("config", campaign_config, "campaign config JSON")->required();
    camp->add_option("--jobs", jobs);
    add_common(camp);

    auto* rep = app.add_subcommand("report", "re-render the report of a finished campaign");
    rep->add_option("config", campaign_config, "campaign config JSON")->required();
    add_common(rep);

    try {
        app.parse(argc, argv);
        if (gs->parsed()) return cmd_ground_state(ham_path, output, seed, text_state);
        if (run->parsed())
            return cmd_run(ham_path, method, layers, iterations, seed, split, adiabatic_steps,
                           output);
        if (grad->parsed())
            return cmd_grad_scan(ham_path, method, depths, samples, epsilon, subsample, jobs,
                                 seed, output);
        if (land->parsed())
            return cmd_landscape(ham_path, method, layers, center_file, range, resolution, mode,
                                 seed, jobs, output, heatmap);
        if (camp->parsed()) return cmd_campaign(campaign_config, output, jobs);
        if (rep->parsed()) return cmd_campaign(campaign_config, output, 1);
    } catch (const CLI::ParseError& e) {
        // --help/--version arrive here with exit code 0; real usage errors
        // are normalized to the documented exit code 2.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ShapeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
