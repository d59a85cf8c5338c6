// Acceptance gate: one pass/fail line per release criterion. Exit status
// is the number of failed criteria, so ctest reports the gate as a single
// test. Tolerances are pinned here on purpose; loosening them is a
// release decision, not a test fix.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vqebench/analysis.hpp"
#include "vqebench/campaign.hpp"
#include "vqebench/ground_state.hpp"
#include "vqebench/methods.hpp"
#include "vqebench/pauli.hpp"
#include "vqebench/spsa.hpp"

using namespace vqebench;
namespace vt = vqebench::testing;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int id, const char* title, bool ok, const std::string& detail, double secs) {
    std::printf("%s  criterion %2d: %-28s  %s  [%.1f s]\n", ok ? "PASS" : "FAIL", id, title,
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int id, const char* title, const std::function<std::pair<bool, std::string>()>& body) {
    const double t0 = now_s();
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    report(id, title, ok, detail, now_s() - t0);
}

std::string data_file(const std::string& name) {
    return std::string(VQEBENCH_DATA_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- criterion 1: Lanczos vs dense diagonalization, every bundled n <= 8 ---
std::pair<bool, std::string> oracle_equivalence() {
    const std::vector<std::string> files = {"tfim_n2.txt", "tfim_n4.txt", "tfim_n6.txt",
                                            "tfim_n8.txt", "h2_sto3g_jw.txt"};
    double worst = 0.0;
    for (const auto& f : files) {
        const auto h = parse_hamiltonian_file(data_file(f));
        const double lanczos = ground_state(h).energy;
        const double dense = vt::dense_ground_energy(h);
        worst = std::max(worst, std::abs(lanczos - dense));
    }
    std::ostringstream d;
    d << "max |E_lanczos - E_dense| = " << worst << " (limit 1e-9, " << files.size() << " files)";
    return {worst < 1e-9, d.str()};
}

// --- criterion 2: finite differences vs parameter shift, 50 random circuits ---
std::pair<bool, std::string> gradient_correctness() {
    Rng seeds(20240);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(seeds.uniform_index(3));  // 1..3 qubits
        const auto circuit = vt::random_circuit(n, 10, seeds.next_u64());
        const auto h = vt::random_pauli_sum(n, 4, seeds.next_u64());
        Rng prng(seeds.next_u64());
        std::vector<double> theta(static_cast<std::size_t>(circuit.n_params()));
        for (auto& t : theta) t = prng.uniform(0.0, 2 * std::numbers::pi);
        const auto fd = finite_diff_gradient(circuit, h, theta, 1e-4);
        const auto ps = vt::parameter_shift_gradient(circuit, h, theta);
        for (std::size_t j = 0; j < fd.size(); ++j)
            worst = std::max(worst, std::abs(fd[j] - ps[j]));
    }
    std::ostringstream d;
    d << "max component error = " << worst << " (limit 1e-6, 50 circuits)";
    return {worst < 1e-6, d.str()};
}

// --- criterion 3: parameter-count identities ---
std::pair<bool, std::string> parameter_counts() {
    for (int n = 2; n <= 14; ++n) {
        for (int L = 0; L <= 50; ++L)
            if (build_efficient_su2(n, L).n_params() != 2 * n * L + 2 * n)
                return {false, "EfficientSU2 count mismatch"};
        for (int d = 1; d <= 50; ++d)
            if (build_sea(n, {d, d, d}).n_params() != 3 * n * d)
                return {false, "SEA count mismatch"};
        if (build_mps(n, 2).n_params() != 2 * n + 2 * (n - 1) * 2)
            return {false, "MPS count mismatch"};
    }
    const int su2 = build_efficient_su2(14, 50).n_params();
    const int sea = build_sea(14, {50, 50, 50}).n_params();
    const int mps = build_mps(14, 2).n_params();
    std::ostringstream d;
    d << "n=14, depth 50: su2 = " << su2 << ", sea = " << sea << ", mps = " << mps;
    return {su2 == 1428 && sea == 2100 && mps == 80, d.str()};
}

// --- criterion 4: plateau classification on the bundled 12-qubit chain ---
std::pair<bool, std::string> plateau_reproduction() {
    const auto h = parse_hamiltonian_file(data_file("heisenberg_xxz_n12.txt"));
    // Component subsampling keeps the depth-50 scans inside the runtime
    // budget on a single core; 288 of 1224 (EfficientSU2) / 1800 (SEA)
    // components per sample, norms rescaled by d/m. Documented in the
    // README analysis section.
    GradientScanOptions opts;
    opts.component_subsample = 288;

    const DepthBuilder su2 = [&](int depth) { return build_efficient_su2(h.n_qubits(), depth); };
    const DepthBuilder sea = [&](int depth) {
        return build_sea(h.n_qubits(), {depth, depth, depth});
    };

    std::ostringstream d;
    bool ok = true;
    for (std::uint64_t seed : {42ULL, 43ULL, 44ULL}) {
        const auto s_su2 = gradient_scan(su2, h, {1, 50}, 100, seed, opts);
        const double r_su2 = classify(s_su2[0], s_su2[1]).ratio;
        const auto s_sea = gradient_scan(sea, h, {1, 50}, 100, seed, opts);
        const double r_sea = classify(s_sea[0], s_sea[1]).ratio;
        d << "seed " << seed << ": su2 " << r_su2 << ", sea " << r_sea << "; ";
        ok = ok && r_su2 < 0.1 && r_sea > 0.3;
    }
    d << "(need su2 < 0.1, sea > 0.3)";
    return {ok, d.str()};
}

// --- criterion 5: small-system convergence on the bundled molecule ---
std::pair<bool, std::string> molecular_convergence(std::vector<double>* all_energies,
                                                   double* reference_energy) {
    const auto h = parse_hamiltonian_file(data_file("h2_sto3g_jw.txt"));
    const Reference ref = make_reference(h);
    SpsaConfig cfg = default_spsa_config();  // 1000 iterations, seed 42
    const auto standard = run_standard(h, 30, cfg, {}, &ref);
    const auto sea = run_sea(h, 30, cfg, {}, &ref);
    if (all_energies) {
        all_energies->insert(all_energies->end(), standard.trace.energies.begin(),
                             standard.trace.energies.end());
        all_energies->insert(all_energies->end(), sea.trace.energies.begin(),
                             sea.trace.energies.end());
    }
    if (reference_energy) *reference_energy = ref.solution.energy;
    std::ostringstream d;
    d << "dE std = " << standard.energy_error << ", dE sea = " << sea.energy_error
      << " (limit 0.05); F sea = " << sea.fidelity << " (limit 0.99)";
    const bool ok =
        standard.energy_error < 0.05 && sea.energy_error < 0.05 && sea.fidelity > 0.99;
    return {ok, d.str()};
}

// --- criterion 7 helper: compact campaign into a given directory ---
CampaignConfig compact_campaign(const fs::path& out_dir, const fs::path& ham_copy) {
    CampaignConfig cfg;
    cfg.hamiltonians = {{"tfim4", ham_copy.string()}};
    cfg.methods = method_names();
    cfg.layers = 2;
    cfg.iterations = 60;
    cfg.grad_depths = {1, 5};
    cfg.grad_samples = 8;
    cfg.seed = 42;
    cfg.output_dir = out_dir.string();
    return cfg;
}

}  // namespace

int main() {
    std::printf("acceptance gate, data dir %s\n", VQEBENCH_DATA_DIR);

    run(1, "oracle equivalence", oracle_equivalence);
    run(2, "gradient correctness", gradient_correctness);
    run(3, "parameter counts", parameter_counts);
    run(4, "plateau classification", plateau_reproduction);

    std::vector<double> campaign_energies;
    double h2_reference = 0.0;
    run(5, "molecular convergence",
        [&] { return molecular_convergence(&campaign_energies, &h2_reference); });

    // Criterion 7 (and data for 6): run the same compact campaign twice.
    const fs::path base = fs::temp_directory_path() / "vqebench_acceptance";
    double tfim4_reference = 0.0;
    run(7, "campaign determinism", [&]() -> std::pair<bool, std::string> {
        fs::remove_all(base);
        fs::create_directories(base);
        const fs::path ham = base / "tfim4.txt";
        fs::copy_file(data_file("tfim_n4.txt"), ham);
        tfim4_reference = vt::dense_ground_energy(parse_hamiltonian_file(ham.string()));

        for (const char* sub : {"a", "b"}) {
            const auto cfg = compact_campaign(base / sub, ham);
            const auto rep = run_campaign(cfg);
            if (rep.any_failed) return {false, std::string("campaign cell failed in run ") + sub};
            // Collect all trace energies for the variational-bound check.
            for (const auto& row : rep.rows) {
                std::ifstream csv(base / sub /
                                  (row.molecule + "_" + row.method + "_" +
                                   std::to_string(cfg.layers) + "L_" +
                                   std::to_string(cfg.seed) + ".csv"));
                std::string line;
                std::getline(csv, line);  // header
                while (std::getline(csv, line)) {
                    const auto comma = line.find(',');
                    if (comma != std::string::npos)
                        campaign_energies.push_back(std::stod(line.substr(comma + 1)));
                }
            }
        }
        const std::string ra = slurp(base / "a" / "report.txt");
        const std::string rb = slurp(base / "b" / "report.txt");
        const bool same_report = !ra.empty() && ra == rb;
        const bool same_csv = slurp(base / "a" / "variance_scaling.csv") ==
                              slurp(base / "b" / "variance_scaling.csv");
        std::ostringstream d;
        d << "report.txt " << (same_report ? "identical" : "DIFFERS") << ", csv "
          << (same_csv ? "identical" : "DIFFERS") << " (timings excluded by design)";
        return {same_report && same_csv, d.str()};
    });

    run(6, "variational bound", [&]() -> std::pair<bool, std::string> {
        // Trace energies from criterion 5 (H2) come first, then the
        // campaign energies from criterion 7 (TFIM n=4); each set is
        // bounded by its own ground energy.
        if (campaign_energies.empty()) return {false, "no trace energies collected"};
        std::size_t h2_count = 2000;  // 2 runs x 1000 iterations
        if (campaign_energies.size() < h2_count)
            return {false, "criterion 5 traces missing"};
        double worst_violation = 0.0;
        for (std::size_t i = 0; i < campaign_energies.size(); ++i) {
            const double floor = (i < h2_count ? h2_reference : tfim4_reference) - 1e-8;
            worst_violation = std::min(worst_violation, campaign_energies[i] - floor);
        }
        std::ostringstream d;
        d << campaign_energies.size() << " trace energies, min margin above (E0 - 1e-8) = "
          << worst_violation;
        return {worst_violation >= 0.0, d.str()};
    });

    run(8, "stability closed forms", []() -> std::pair<bool, std::string> {
        ConvergenceTrace constant;
        constant.energies.assign(100, -1.25);
        ConvergenceTrace alternating;
        for (int i = 0; i < 100; ++i) alternating.energies.push_back(i % 2 == 0 ? 1.0 : -1.0);
        const double s_const = stability(constant);
        const double s_alt = stability(alternating);
        std::ostringstream d;
        d << "constant tail -> " << s_const << " (exact 0), alternating tail -> " << s_alt
          << " (exact 1), window 20";
        return {s_const == 0.0 && s_alt == 1.0, d.str()};
    });

    run(9, "landscape contract", []() -> std::pair<bool, std::string> {
        const auto h = builtin_hamiltonian("transverse_field_ising", 2);
        const auto circuit = build_efficient_su2(2, 1);
        std::vector<double> center(static_cast<std::size_t>(circuit.n_params()), 0.2);
        // Default scan: exactly 100 x 100 cells spanning +/- 0.4 rad.
        const auto grid = landscape_scan(circuit, h, center, 0.4, 100);
        const bool shape_ok = grid.resolution == 100 && grid.energies.size() == 100u * 100u &&
                              grid.half_range == 0.4;
        // Corner cells sit exactly at +/- half_range along the scan axes.
        std::vector<double> corner = center;
        corner[0] += 0.4;
        corner[1] += 0.4;
        const double corner_err =
            std::abs(grid.at(99, 99) - circuit.energy(corner, h));
        // Center-cell consistency at odd resolution: the middle cell must
        // reproduce the direct evaluation at the center point.
        const auto odd = landscape_scan(circuit, h, center, 0.4, 101);
        const double center_err = std::abs(odd.at(50, 50) - circuit.energy(center, h));
        std::ostringstream d;
        d << "100x100 over +/-0.4: " << (shape_ok ? "yes" : "NO") << ", corner err = "
          << corner_err << ", center err = " << center_err << " (limit 1e-10)";
        return {shape_ok && corner_err < 1e-10 && center_err < 1e-10, d.str()};
    });

    run(10, "spsa schedule", []() -> std::pair<bool, std::string> {
        const auto cfg = default_spsa_config();
        const bool start_ok = spsa_step_size(cfg, 0) == 0.1 && spsa_perturbation(cfg, 0) == 0.1;
        bool decreasing = true;
        for (int k = 0; k + 1 < 1000; ++k)
            decreasing = decreasing && spsa_step_size(cfg, k + 1) < spsa_step_size(cfg, k) &&
                         spsa_perturbation(cfg, k + 1) < spsa_perturbation(cfg, k);
        std::ostringstream d;
        d << "a_0 = " << spsa_step_size(cfg, 0) << ", c_0 = " << spsa_perturbation(cfg, 0)
          << " (exact 0.1), strictly decreasing over 1000 iterations: "
          << (decreasing ? "yes" : "NO");
        return {start_ok && decreasing, d.str()};
    });

    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
