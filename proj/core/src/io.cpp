#include "vqebench/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"
#include "vqebench/version.hpp"

namespace vqebench {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open file for writing: " + path);
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

void write_trace_csv(const std::string& path, const std::vector<double>& energies) {
    auto out = open_out(path);
    out << "iteration,energy\n";
    for (std::size_t k = 0; k < energies.size(); ++k)
        out << k << ',' << fmt(energies[k]) << '\n';
}

void write_gradient_stats_csv(const std::string& path, const std::vector<GradientStats>& stats) {
    auto out = open_out(path);
    out << "depth,mean_norm,variance,n_samples\n";
    for (const auto& s : stats)
        out << s.depth << ',' << fmt(s.mean_norm) << ',' << fmt(s.variance_of_norms) << ','
            << s.sample_count << '\n';
}

void write_landscape_csv(const std::string& path, const LandscapeGrid& grid) {
    auto out = open_out(path);
    out << "i,j,x,y,energy\n";
    const int res = grid.resolution;
    auto offset = [&](int idx) {
        return -grid.half_range + 2.0 * grid.half_range * idx / (res - 1);
    };
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j)
            out << i << ',' << j << ',' << fmt(offset(i)) << ',' << fmt(offset(j)) << ','
                << fmt(grid.at(i, j)) << '\n';
}

void write_heatmap_svg(const std::string& path, const LandscapeGrid& grid) {
    const int res = grid.resolution;
    const auto [lo_it, hi_it] = std::ranges::minmax_element(grid.energies);
    const double lo = *lo_it, hi = *hi_it;
    const double span = (hi > lo) ? (hi - lo) : 1.0;
    const int cell = std::max(1, 512 / res);
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << res * cell << "\" height=\""
        << res * cell << "\">\n";
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            const int g = static_cast<int>(255.0 * (grid.at(i, j) - lo) / span);
            out << "<rect x=\"" << i * cell << "\" y=\"" << (res - 1 - j) * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << g << ',' << g << ',' << g
                << ")\"/>\n";
        }
    }
    out << "</svg>\n";
}

void write_method_result_json(const std::string& path, const std::string& molecule,
                              int n_layers, std::uint64_t seed, const MethodResult& result) {
    nlohmann::ordered_json j;
    j["molecule"] = molecule;
    j["method"] = method_name(result.method);
    j["layers"] = n_layers;
    j["seed"] = seed;
    j["final_energy"] = result.final_energy;
    j["reference_energy"] = result.reference_energy;
    j["energy_error"] = result.energy_error;
    j["fidelity"] = result.fidelity;
    j["stability"] = result.stability;
    j["stability_truncated"] = result.stability_truncated;
    j["stage_boundaries"] = result.stage_boundaries;
    j["iterations"] = result.trace.energies.size();
    j["evaluations"] = result.trace.evaluations;
    j["rng"] = Rng::kAlgorithmId;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_statevector_binary(const std::string& path, const Statevector& state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open file for writing: " + path);
    for (const auto& a : state.amplitudes()) {
        const double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

void write_statevector_text(const std::string& path, const Statevector& state) {
    auto out = open_out(path);
    out << "# index real imag  (qubit 0 = least-significant bit)\n";
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        out << i << ' ' << fmt(amps[i].real()) << ' ' << fmt(amps[i].imag()) << '\n';
}

void write_run_manifest(const std::string& path, const std::string& command,
                        const std::string& config_json, double wall_time_s) {
    nlohmann::ordered_json j;
    j["artifact"] = kVersion;
    j["rng"] = Rng::kAlgorithmId;
    j["command"] = command;
    j["config"] = nlohmann::json::parse(config_json);
    j["wall_time_s"] = wall_time_s;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::string string_hash(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_content_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return string_hash(ss.str());
}

}  // namespace vqebench
