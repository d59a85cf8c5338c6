#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqebench/analysis.hpp"
#include "vqebench/methods.hpp"
#include "vqebench/spsa.hpp"

namespace vqebench {

/// CSV with header `iteration,energy`.
void write_trace_csv(const std::string& path, const std::vector<double>& energies);

/// CSV with header `depth,mean_norm,variance,n_samples`.
void write_gradient_stats_csv(const std::string& path, const std::vector<GradientStats>& stats);

/// CSV with header `i,j,x,y,energy`.
void write_landscape_csv(const std::string& path, const LandscapeGrid& grid);

/// Minimal self-contained monochrome heatmap (SVG rectangles, no plotting
/// dependency).
void write_heatmap_svg(const std::string& path, const LandscapeGrid& grid);

/// Structured result record for one method run.
void write_method_result_json(const std::string& path, const std::string& molecule,
                              int n_layers, std::uint64_t seed, const MethodResult& result);

/// Normalized statevector as little-endian double pairs (re, im).
void write_statevector_binary(const std::string& path, const Statevector& state);
void write_statevector_text(const std::string& path, const Statevector& state);

/// Run manifest: configuration, seed, RNG identifier, wall time.
void write_run_manifest(const std::string& path, const std::string& command,
                        const std::string& config_json, double wall_time_s);

/// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string file_content_hash(const std::string& path);
std::string string_hash(const std::string& data);

}  // namespace vqebench
