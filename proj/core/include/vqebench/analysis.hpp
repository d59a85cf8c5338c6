#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vqebench/ansatz.hpp"
#include "vqebench/pauli.hpp"
#include "vqebench/spsa.hpp"

namespace vqebench {

/// Central finite-difference gradient of the circuit energy, component by
/// component; exactly 2 * n_params energy evaluations. Shared circuit
/// prefixes are cached, which leaves every value bit-identical to the
/// naive evaluation.
std::vector<double> finite_diff_gradient(const AnsatzCircuit& circuit, const PauliSum& h,
                                         const std::vector<double>& theta,
                                         double epsilon = 1e-4);

/// Distribution summary of sampled gradient norms at one depth.
struct GradientStats {
    int depth = 0;
    int sample_count = 0;
    double mean_norm = 0.0;          // Ha/rad
    double variance_of_norms = 0.0;  // population variance, Ha^2/rad^2
    std::vector<double> per_sample_norms;
};

struct GradientScanOptions {
    double epsilon = 1e-4;
    /// When > 0, estimate each norm from this many uniformly chosen
    /// components, rescaled by d/m. Documented deviation from the full
    /// 2d-evaluation protocol; off by default.
    int component_subsample = 0;
    int jobs = 1;
};

using DepthBuilder = std::function<AnsatzCircuit(int depth)>;

/// For each depth: build the circuit, draw n_samples parameter vectors
/// uniformly from (0, 2pi), and aggregate gradient norms. Each depth uses
/// an independent sub-seed, so adding depths never perturbs existing
/// results.
std::vector<GradientStats> gradient_scan(const DepthBuilder& builder, const PauliSum& h,
                                         const std::vector<int>& depths, int n_samples,
                                         std::uint64_t seed,
                                         const GradientScanOptions& options = {});

enum class PlateauLabel { GradientMaintained, ModeratePlateau, StrongPlateau };

struct PlateauClassification {
    double ratio;  // Var(L=50) / Var(L=1)
    PlateauLabel label;
};

std::string to_string(PlateauLabel label);

/// Ratio thresholds: >= 0.5 maintained, [0.01, 0.5) moderate, < 0.01
/// strong. Throws NumericalError when the baseline variance is zero.
PlateauClassification classify(const GradientStats& stats_l1, const GradientStats& stats_l50);

enum class DirectionMode { FirstTwoCoords, RandomOrthonormal };

/// 2-D slice of the energy landscape around a center point.
struct LandscapeGrid {
    std::vector<double> center;
    std::vector<double> direction_u;
    std::vector<double> direction_v;
    double half_range;
    int resolution;
    std::vector<double> energies;  // row-major, energies[i * resolution + j]

    double at(int i, int j) const { return energies[static_cast<std::size_t>(i) * resolution + j]; }
};

LandscapeGrid landscape_scan(const AnsatzCircuit& circuit, const PauliSum& h,
                             const std::vector<double>& theta_star, double half_range,
                             int resolution, DirectionMode mode = DirectionMode::FirstTwoCoords,
                             std::uint64_t seed = 42, int jobs = 1);

/// Population standard deviation of the last min(window, length) trace
/// energies.
double stability(const ConvergenceTrace& trace, int window = 20);

double population_variance(const std::vector<double>& values);

}  // namespace vqebench
