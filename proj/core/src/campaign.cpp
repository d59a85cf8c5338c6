#include "vqebench/campaign.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vqebench/analysis.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/ground_state.hpp"
#include "vqebench/io.hpp"
#include "vqebench/methods.hpp"
#include "vqebench/rng.hpp"
#include "vqebench/version.hpp"

namespace vqebench {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw ConfigError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

/// Tracks completed cells across interrupted runs. Invalidated when the
/// configuration hash changes.
class Manifest {
public:
    Manifest(fs::path path, std::string config_hash)
        : path_(std::move(path)), config_hash_(std::move(config_hash)) {
        std::ifstream in(path_);
        if (!in) return;
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded() || j.value("config_hash", "") != config_hash_) return;
        cells_ = j.value("cells", json::object());
    }

    bool is_done(const std::string& key) const {
        if (!cells_.contains(key) || cells_[key].value("status", "") != "done") return false;
        for (const auto& f : cells_[key].value("files", std::vector<std::string>{}))
            if (!fs::exists(f)) return false;
        return true;
    }

    void mark_done(const std::string& key, const std::vector<std::string>& files) {
        json entry;
        entry["status"] = "done";
        entry["files"] = files;
        json hashes = json::array();
        for (const auto& f : files) hashes.push_back(file_content_hash(f));
        entry["hashes"] = hashes;
        cells_[key] = entry;
        flush();
    }

    void mark_failed(const std::string& key, const std::string& error) {
        cells_[key] = json{{"status", "failed"}, {"error", error}};
        flush();
    }

private:
    void flush() const {
        ordered_json j;
        j["artifact"] = kVersion;
        j["rng"] = Rng::kAlgorithmId;
        j["config_hash"] = config_hash_;
        j["cells"] = cells_;
        atomic_write(path_, j.dump(2) + "\n");
    }

    fs::path path_;
    std::string config_hash_;
    json cells_ = json::object();
};

/// Ground-state solutions cached on disk, keyed by the Hamiltonian file's
/// content hash.
Reference load_or_solve_reference(const PauliSum& h, const std::string& content_hash,
                                  const fs::path& cache_dir) {
    const fs::path meta_path = cache_dir / (content_hash + ".ground.json");
    const fs::path vec_path = cache_dir / (content_hash + ".ground.vec");
    const std::size_t dim = 1ULL << h.n_qubits();

    if (fs::exists(meta_path) && fs::exists(vec_path)) {
        std::ifstream meta_in(meta_path);
        json meta = json::parse(meta_in);
        std::ifstream vec_in(vec_path, std::ios::binary);
        const int n_basis = meta.at("n_basis");
        auto read_state = [&] {
            std::vector<cplx> amps(dim);
            for (auto& a : amps) {
                double re = 0.0, im = 0.0;
                vec_in.read(reinterpret_cast<char*>(&re), sizeof(double));
                vec_in.read(reinterpret_cast<char*>(&im), sizeof(double));
                a = {re, im};
            }
            return Statevector(h.n_qubits(), std::move(amps));
        };
        Reference ref{{meta.at("energy"), read_state(), meta.at("residual_norm")}, {}};
        // First basis vector is stored again after the solution state.
        for (int b = 0; b < n_basis; ++b) ref.ground_basis.push_back(read_state());
        if (vec_in) return ref;
    }

    Reference ref = make_reference(h);
    fs::create_directories(cache_dir);
    {
        std::ofstream vec_out(vec_path, std::ios::binary);
        auto write_state = [&](const Statevector& s) {
            for (const auto& a : s.amplitudes()) {
                const double re = a.real(), im = a.imag();
                vec_out.write(reinterpret_cast<const char*>(&re), sizeof(double));
                vec_out.write(reinterpret_cast<const char*>(&im), sizeof(double));
            }
        };
        write_state(ref.solution.state);
        for (const auto& s : ref.ground_basis) write_state(s);
    }
    ordered_json meta;
    meta["energy"] = ref.solution.energy;
    meta["residual_norm"] = ref.solution.residual_norm;
    meta["n_qubits"] = h.n_qubits();
    meta["n_basis"] = static_cast<int>(ref.ground_basis.size());
    atomic_write(meta_path, meta.dump(2) + "\n");
    return ref;
}

/// Circuit used by the gradient-variance sweep; SEA scales as [L, L, L].
AnsatzCircuit circuit_for(const std::string& method, int n_qubits, int depth) {
    if (method == "sea") return build_sea(n_qubits, {depth, depth, depth});
    if (method == "pretrained_stage1") return build_mps(n_qubits, 2);
    return build_efficient_su2(n_qubits, depth);
}

std::string run_basename(const std::string& molecule, const std::string& method, int layers,
                         std::uint64_t seed) {
    return molecule + "_" + method + "_" + std::to_string(layers) + "L_" +
           std::to_string(seed);
}

}  // namespace

CampaignConfig CampaignConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open campaign config: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError("campaign config is not valid JSON: " + path);
    CampaignConfig cfg;
    for (const auto& h : j.at("hamiltonians"))
        cfg.hamiltonians.push_back({h.at("name"), h.at("path")});
    cfg.methods = j.value("methods", method_names());
    cfg.layers = j.value("layers", cfg.layers);
    cfg.grad_depths = j.value("grad_depths", cfg.grad_depths);
    cfg.iterations = j.value("iterations", cfg.iterations);
    cfg.grad_samples = j.value("grad_samples", cfg.grad_samples);
    cfg.grad_subsample = j.value("grad_subsample", cfg.grad_subsample);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.split = j.value("split", cfg.split);
    cfg.adiabatic_steps = j.value("adiabatic_steps", cfg.adiabatic_steps);
    cfg.run_convergence = j.value("run_convergence", cfg.run_convergence);
    cfg.run_gradient_scan = j.value("run_gradient_scan", cfg.run_gradient_scan);
    cfg.run_landscape = j.value("run_landscape", cfg.run_landscape);
    cfg.landscape_range = j.value("landscape_range", cfg.landscape_range);
    cfg.landscape_resolution = j.value("landscape_resolution", cfg.landscape_resolution);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    return cfg;
}

std::string CampaignConfig::to_json() const {
    ordered_json j;
    json hams = json::array();
    for (const auto& h : hamiltonians) hams.push_back({{"name", h.name}, {"path", h.path}});
    j["hamiltonians"] = hams;
    j["methods"] = methods;
    j["layers"] = layers;
    j["grad_depths"] = grad_depths;
    j["iterations"] = iterations;
    j["grad_samples"] = grad_samples;
    j["grad_subsample"] = grad_subsample;
    j["seed"] = seed;
    j["split"] = split;
    j["adiabatic_steps"] = adiabatic_steps;
    j["run_convergence"] = run_convergence;
    j["run_gradient_scan"] = run_gradient_scan;
    j["run_landscape"] = run_landscape;
    j["landscape_range"] = landscape_range;
    j["landscape_resolution"] = landscape_resolution;
    j["output_dir"] = output_dir;
    return j.dump(2);
}

void CampaignConfig::validate() const {
    if (hamiltonians.empty()) throw ConfigError("campaign: no Hamiltonians configured");
    if (methods.empty()) throw ConfigError("campaign: no methods configured");
    for (const auto& m : methods) method_from_name(m);  // throws on bad name
    if (iterations < 1) throw ConfigError("campaign: iteration budget must be >= 1");
    if (grad_depths.empty()) throw ConfigError("campaign: depth list must be non-empty");
    if (grad_samples < 2) throw ConfigError("campaign: grad_samples must be >= 2");
    for (const auto& h : hamiltonians) {
        parse_hamiltonian_file(h.path);  // throws if missing or malformed
    }
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const fs::path out_dir(cfg.output_dir);
    fs::create_directories(out_dir);
    fs::create_directories(out_dir / "convergence");

    // Note: the config hash covers everything except jobs (worker count
    // must not affect results or resume identity).
    CampaignConfig hashed = cfg;
    hashed.jobs = 1;
    const std::string config_hash = string_hash(hashed.to_json());
    Manifest manifest(out_dir / "campaign_manifest.json", config_hash);

    CampaignReport report;
    std::vector<std::pair<std::string, double>> timings;

    for (const auto& spec : cfg.hamiltonians) {
        const PauliSum h = parse_hamiltonian_file(spec.path);
        const std::string h_hash = file_content_hash(spec.path);
        Reference reference = load_or_solve_reference(h, h_hash, out_dir / "cache");
        report.reference_energies[spec.name] = reference.solution.energy;

        for (const auto& method : cfg.methods) {
            CellOutcome row;
            row.molecule = spec.name;
            row.method = method;
            row.ok = true;
            const auto t0 = std::chrono::steady_clock::now();

            const std::string base = run_basename(spec.name, method, cfg.layers, cfg.seed);
            const fs::path result_json = out_dir / (base + ".json");
            const fs::path trace_csv = out_dir / (base + ".csv");
            const fs::path dat_file = out_dir / "convergence" / (spec.name + "_" + method + ".dat");
            const std::string conv_key = "conv:" + spec.name + ":" + method;

            if (cfg.run_convergence) {
                try {
                    if (!manifest.is_done(conv_key)) {
                        SpsaConfig spsa = default_spsa_config();
                        spsa.max_iterations = cfg.iterations;
                        spsa.seed = cfg.seed;
                        MethodOptions opts;
                        opts.stage_split = cfg.split;
                        opts.adiabatic_steps = cfg.adiabatic_steps;
                        MethodResult res = run_method(method_from_name(method), h, cfg.layers,
                                                      spsa, opts, &reference);

                        // Gradient norm at the converged point (Table 2 column).
                        const AnsatzCircuit final_circuit =
                            circuit_for(method, h.n_qubits(), cfg.layers);
                        double gn = 0.0;
                        if (static_cast<int>(res.trace.final_params.size()) ==
                            final_circuit.n_params()) {
                            for (double g :
                                 finite_diff_gradient(final_circuit, h, res.trace.final_params))
                                gn += g * g;
                            gn = std::sqrt(gn);
                        }

                        write_method_result_json(result_json.string(), spec.name, cfg.layers,
                                                 cfg.seed, res);
                        {
                            // Extend the record with the data the report and
                            // landscape cells need.
                            std::ifstream in(result_json);
                            ordered_json j = ordered_json::parse(in);
                            in.close();
                            j["grad_norm_final"] = gn;
                            j["final_params"] = res.trace.final_params;
                            atomic_write(result_json, j.dump(2) + "\n");
                        }
                        write_trace_csv(trace_csv.string(), res.trace.energies);
                        {
                            std::ofstream dat(dat_file);
                            dat << "# iteration  energy_on_full_hamiltonian\n";
                            for (std::size_t k = 0; k < res.energies_on_full_h.size(); ++k)
                                dat << k << "  " << res.energies_on_full_h[k] << '\n';
                        }
                        manifest.mark_done(conv_key, {result_json.string(), trace_csv.string(),
                                                      dat_file.string()});
                    }
                    std::ifstream in(result_json);
                    json j = json::parse(in);
                    row.final_energy = j.at("final_energy");
                    row.energy_error = j.at("energy_error");
                    row.fidelity = j.at("fidelity");
                    row.stability = j.at("stability");
                    row.grad_norm_final = j.value("grad_norm_final", 0.0);
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                    manifest.mark_failed(conv_key, e.what());
                }
            }

            if (cfg.run_gradient_scan && row.error.empty()) {
                const fs::path stats_csv = out_dir / (spec.name + "_" + method + "_gradstats.csv");
                const fs::path scan_json = out_dir / (spec.name + "_" + method + "_gradscan.json");
                const std::string grad_key = "grad:" + spec.name + ":" + method;
                try {
                    if (!manifest.is_done(grad_key)) {
                        GradientScanOptions opts;
                        opts.component_subsample = cfg.grad_subsample;
                        opts.jobs = cfg.jobs;
                        DepthBuilder builder = [&](int depth) {
                            return circuit_for(method, h.n_qubits(), depth);
                        };
                        // Per-(molecule, method) sub-seed so scans are
                        // independent of list order.
                        const std::uint64_t scan_seed =
                            Rng(cfg.seed).split(std::hash<std::string>{}(spec.name + method)).seed();
                        auto stats = gradient_scan(builder, h, cfg.grad_depths, cfg.grad_samples,
                                                   scan_seed, opts);
                        write_gradient_stats_csv(stats_csv.string(), stats);
                        const auto cls = classify(stats.front(), stats.back());
                        ordered_json j;
                        j["molecule"] = spec.name;
                        j["method"] = method;
                        j["seed"] = scan_seed;
                        j["var_first"] = stats.front().variance_of_norms;
                        j["var_last"] = stats.back().variance_of_norms;
                        j["depth_first"] = stats.front().depth;
                        j["depth_last"] = stats.back().depth;
                        j["ratio"] = cls.ratio;
                        j["classification"] = to_string(cls.label);
                        j["component_subsample"] = cfg.grad_subsample;
                        atomic_write(scan_json, j.dump(2) + "\n");
                        manifest.mark_done(grad_key, {stats_csv.string(), scan_json.string()});
                    }
                    std::ifstream in(scan_json);
                    json j = json::parse(in);
                    row.var_first = j.at("var_first");
                    row.var_last = j.at("var_last");
                    row.ratio = j.at("ratio");
                    row.classification = j.at("classification");
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                    manifest.mark_failed(grad_key, e.what());
                }
            }

            if (cfg.run_landscape && row.error.empty()) {
                const fs::path land_csv = out_dir / (spec.name + "_" + method + "_landscape.csv");
                const std::string land_key = "land:" + spec.name + ":" + method;
                try {
                    if (!manifest.is_done(land_key)) {
                        std::ifstream in(result_json);
                        if (!in) throw ConfigError("landscape needs the convergence result file");
                        json j = json::parse(in);
                        std::vector<double> center =
                            j.value("final_params", std::vector<double>{});
                        const AnsatzCircuit circuit =
                            circuit_for(method, h.n_qubits(), cfg.layers);
                        if (static_cast<int>(center.size()) != circuit.n_params())
                            throw ShapeError("landscape: center dimension mismatch");
                        auto grid = landscape_scan(circuit, h, center, cfg.landscape_range,
                                                   cfg.landscape_resolution,
                                                   DirectionMode::FirstTwoCoords, cfg.seed,
                                                   cfg.jobs);
                        write_landscape_csv(land_csv.string(), grid);
                        manifest.mark_done(land_key, {land_csv.string()});
                    }
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                    manifest.mark_failed(land_key, e.what());
                }
            }

            row.wall_time_s = elapsed_s(t0);
            if (!row.ok) report.any_failed = true;
            timings.emplace_back(spec.name + "/" + method, row.wall_time_s);
            report.rows.push_back(std::move(row));
        }
    }

    {
        std::ofstream t(out_dir / "timings.txt");
        t << "# cell wall times (seconds); informative only, excluded from\n"
             "# the determinism contract\n";
        for (const auto& [k, v] : timings) t << k << ' ' << v << '\n';
    }
    render_report(report, cfg.output_dir);
    return report;
}

}  // namespace vqebench
