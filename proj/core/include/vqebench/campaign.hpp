#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vqebench {

struct HamiltonianSpec {
    std::string name;
    std::string path;
};

/// Declarative description of a molecule x method x analysis matrix.
struct CampaignConfig {
    std::vector<HamiltonianSpec> hamiltonians;
    std::vector<std::string> methods;
    int layers = 30;                               // convergence-run depth
    std::vector<int> grad_depths = {1, 2, 5, 10, 20, 50};
    int iterations = 1000;
    int grad_samples = 100;
    int grad_subsample = 0;                        // 0 = full gradients
    std::uint64_t seed = 42;
    double split = 0.5;
    int adiabatic_steps = 5;
    bool run_convergence = true;
    bool run_gradient_scan = true;
    bool run_landscape = false;
    double landscape_range = 0.4;
    int landscape_resolution = 100;
    int jobs = 1;
    std::string output_dir = "campaign_out";

    static CampaignConfig from_json_file(const std::string& path);
    std::string to_json() const;
    void validate() const;
};

/// One (molecule, method) result row; failures are recorded, never
/// silently dropped.
struct CellOutcome {
    std::string molecule;
    std::string method;
    bool ok = false;
    std::string error;

    // convergence metrics
    double final_energy = 0.0;
    double energy_error = 0.0;
    double fidelity = 0.0;
    double stability = 0.0;
    double grad_norm_final = 0.0;

    // gradient-scan metrics (first/last configured depths)
    double var_first = 0.0;
    double var_last = 0.0;
    double ratio = 0.0;
    std::string classification;

    double wall_time_s = 0.0;
};

struct CampaignReport {
    std::vector<CellOutcome> rows;
    std::map<std::string, double> reference_energies;
    bool any_failed = false;
};

/// Execute the campaign: one cached ground-state solve per molecule, then
/// convergence runs and gradient scans per (molecule, method). Completed
/// cells found in the output manifest are skipped, making interrupted
/// campaigns resumable.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// Emit report.txt (variance-scaling and landscape/stability tables),
/// the matching CSVs, and gnuplot-ready convergence data files.
/// Deterministic output; wall times go to a separate timings file.
void render_report(const CampaignReport& report, const std::string& output_dir);

}  // namespace vqebench
