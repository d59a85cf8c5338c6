#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "vqebench/campaign.hpp"
#include "vqebench/errors.hpp"

namespace vqebench {

namespace fs = std::filesystem;

namespace {

std::string num(double v, int precision = 6) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

void render_report(const CampaignReport& report, const std::string& output_dir) {
    const fs::path dir(output_dir);
    fs::create_directories(dir);

    {
        std::ofstream csv(dir / "variance_scaling.csv");
        csv << "molecule,method,var_L1,var_L50,ratio,classification\n";
        for (const auto& r : report.rows) {
            if (!r.ok) {
                csv << r.molecule << ',' << r.method << ",,,,ERROR\n";
                continue;
            }
            csv << r.molecule << ',' << r.method << ',' << num(r.var_first, 12) << ','
                << num(r.var_last, 12) << ',' << num(r.ratio, 12) << ',' << r.classification
                << '\n';
        }
    }
    {
        std::ofstream csv(dir / "landscape_stability.csv");
        csv << "molecule,method,stability,grad_norm,state_fidelity\n";
        for (const auto& r : report.rows) {
            if (!r.ok) {
                csv << r.molecule << ',' << r.method << ",,,ERROR\n";
                continue;
            }
            csv << r.molecule << ',' << r.method << ',' << num(r.stability, 12) << ','
                << num(r.grad_norm_final, 12) << ',' << num(r.fidelity, 12) << '\n';
        }
    }

    std::ofstream out(dir / "report.txt");
    out << "Gradient variance scaling\n";
    out << pad("Molecule", 12) << pad("Method", 14) << pad("Var_1L", 12) << pad("Var_50L", 12)
        << pad("Var.Ratio", 12) << "Classification\n";
    for (const auto& r : report.rows) {
        if (!r.ok) {
            out << pad(r.molecule, 12) << pad(r.method, 14) << "ERROR: " << r.error << '\n';
            continue;
        }
        out << pad(r.molecule, 12) << pad(r.method, 14) << pad(num(r.var_first), 12)
            << pad(num(r.var_last), 12) << pad(num(r.ratio), 12) << r.classification << '\n';
    }

    out << "\nLoss landscape characteristics\n";
    out << pad("Molecule", 12) << pad("Method", 14) << pad("Stability", 14)
        << pad("Grad. Norm", 12) << "State Fidelity\n";
    for (const auto& r : report.rows) {
        if (!r.ok) {
            out << pad(r.molecule, 12) << pad(r.method, 14) << "ERROR: " << r.error << '\n';
            continue;
        }
        out << pad(r.molecule, 12) << pad(r.method, 14) << pad(num(r.stability), 14)
            << pad(num(r.grad_norm_final), 12) << num(r.fidelity) << '\n';
    }

    out << "\nReference energies (Ha)\n";
    for (const auto& [mol, e] : report.reference_energies)
        out << pad(mol, 12) << num(e, 12) << '\n';

    out << "\nEnergy errors (Ha)\n";
    for (const auto& r : report.rows) {
        if (!r.ok) continue;
        out << pad(r.molecule, 12) << pad(r.method, 14) << num(r.energy_error) << '\n';
    }
}

}  // namespace vqebench
