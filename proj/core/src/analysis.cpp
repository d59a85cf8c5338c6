#include "vqebench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "vqebench/detail/parallel.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"

namespace vqebench {

namespace {

/// Gradient components for the given slots (ascending first-gate order),
/// reusing the circuit prefix shared by consecutive slots.
std::vector<double> gradient_components(const AnsatzCircuit& circuit, const PauliSum& h,
                                        const std::vector<double>& theta, double epsilon,
                                        const std::vector<int>& slots) {
    const auto& first_gate = circuit.first_gate_of_slot();
    std::vector<double> grad(slots.size());
    Statevector prefix(circuit.n_qubits());
    std::size_t prefix_pos = 0;
    std::vector<double> work = theta;
    const std::size_t n_gates = circuit.gates().size();
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const int j = slots[s];
        const std::size_t start = first_gate[static_cast<std::size_t>(j)];
        circuit.apply_range(prefix, theta, prefix_pos, start);
        prefix_pos = start;
        double e[2];
        for (int side = 0; side < 2; ++side) {
            work[static_cast<std::size_t>(j)] =
                theta[static_cast<std::size_t>(j)] + (side == 0 ? epsilon : -epsilon);
            Statevector state = prefix;
            circuit.apply_range(state, work, start, n_gates);
            e[side] = expectation(state, h);
            if (!std::isfinite(e[side]))
                throw NumericalError("finite_diff_gradient: non-finite energy");
        }
        work[static_cast<std::size_t>(j)] = theta[static_cast<std::size_t>(j)];
        grad[s] = (e[0] - e[1]) / (2.0 * epsilon);
    }
    return grad;
}

std::vector<int> slots_by_gate_order(const AnsatzCircuit& circuit) {
    std::vector<int> slots(static_cast<std::size_t>(circuit.n_params()));
    std::iota(slots.begin(), slots.end(), 0);
    const auto& first = circuit.first_gate_of_slot();
    std::ranges::sort(slots, {}, [&](int j) { return first[static_cast<std::size_t>(j)]; });
    return slots;
}

}  // namespace

std::vector<double> finite_diff_gradient(const AnsatzCircuit& circuit, const PauliSum& h,
                                         const std::vector<double>& theta, double epsilon) {
    if (theta.size() != static_cast<std::size_t>(circuit.n_params()))
        throw ShapeError("finite_diff_gradient: parameter count mismatch");
    if (!(epsilon > 0.0)) throw ConfigError("finite_diff_gradient: epsilon must be > 0");
    const auto slots = slots_by_gate_order(circuit);
    const auto comp = gradient_components(circuit, h, theta, epsilon, slots);
    std::vector<double> grad(theta.size());
    for (std::size_t s = 0; s < slots.size(); ++s)
        grad[static_cast<std::size_t>(slots[s])] = comp[s];
    return grad;
}

double population_variance(const std::vector<double>& values) {
    if (values.empty()) throw Error("population_variance: empty input");
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

std::vector<GradientStats> gradient_scan(const DepthBuilder& builder, const PauliSum& h,
                                         const std::vector<int>& depths, int n_samples,
                                         std::uint64_t seed, const GradientScanOptions& options) {
    if (n_samples < 2) throw ConfigError("gradient_scan: n_samples must be >= 2");
    std::vector<GradientStats> result;
    const Rng master(seed);
    for (int depth : depths) {
        const AnsatzCircuit circuit = builder(depth);
        const int d = circuit.n_params();
        const Rng depth_rng = master.split(static_cast<std::uint64_t>(depth));
        std::vector<double> norms(static_cast<std::size_t>(n_samples));
        detail::parallel_for(static_cast<std::size_t>(n_samples), options.jobs, [&](std::size_t i) {
            Rng rng = depth_rng.split(i);
            std::vector<double> theta(static_cast<std::size_t>(d));
            for (auto& t : theta) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
            std::vector<int> slots;
            double scale = 1.0;
            if (options.component_subsample > 0 && options.component_subsample < d) {
                const int m = options.component_subsample;
                // Partial Fisher-Yates draw of m distinct component indices.
                std::vector<int> pool(static_cast<std::size_t>(d));
                std::iota(pool.begin(), pool.end(), 0);
                for (int k = 0; k < m; ++k) {
                    const auto pick =
                        k + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(d - k)));
                    std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick)]);
                }
                slots.assign(pool.begin(), pool.begin() + m);
                const auto& first = circuit.first_gate_of_slot();
                std::ranges::sort(slots, {}, [&](int j) { return first[static_cast<std::size_t>(j)]; });
                scale = static_cast<double>(d) / m;
            } else {
                slots = slots_by_gate_order(circuit);
            }
            const auto comp = gradient_components(circuit, h, theta, options.epsilon, slots);
            double norm_sq = 0.0;
            for (double g : comp) norm_sq += g * g;
            norms[i] = std::sqrt(scale * norm_sq);
        });
        GradientStats stats;
        stats.depth = depth;
        stats.sample_count = n_samples;
        stats.mean_norm =
            std::accumulate(norms.begin(), norms.end(), 0.0) / static_cast<double>(n_samples);
        stats.variance_of_norms = population_variance(norms);
        stats.per_sample_norms = std::move(norms);
        result.push_back(std::move(stats));
    }
    return result;
}

std::string to_string(PlateauLabel label) {
    switch (label) {
        case PlateauLabel::GradientMaintained: return "Grad. Maintained";
        case PlateauLabel::ModeratePlateau: return "Mod. Plateau";
        case PlateauLabel::StrongPlateau: return "Strong Plateau";
    }
    return "?";
}

PlateauClassification classify(const GradientStats& stats_l1, const GradientStats& stats_l50) {
    if (!(stats_l1.variance_of_norms > 0.0))
        throw NumericalError("classify: baseline variance is zero, ratio undefined");
    const double r = stats_l50.variance_of_norms / stats_l1.variance_of_norms;
    PlateauLabel label;
    if (r >= 0.5)
        label = PlateauLabel::GradientMaintained;
    else if (r >= 0.01)
        label = PlateauLabel::ModeratePlateau;
    else
        label = PlateauLabel::StrongPlateau;
    return {r, label};
}

namespace {

std::vector<double> normalized(std::vector<double> v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (n < 1e-300) throw NumericalError("landscape_scan: zero direction vector");
    for (double& x : v) x /= n;
    return v;
}

}  // namespace

LandscapeGrid landscape_scan(const AnsatzCircuit& circuit, const PauliSum& h,
                             const std::vector<double>& theta_star, double half_range,
                             int resolution, DirectionMode mode, std::uint64_t seed, int jobs) {
    const auto d = static_cast<std::size_t>(circuit.n_params());
    if (theta_star.size() != d)
        throw ShapeError("landscape_scan: center dimension mismatch");
    if (resolution < 2) throw ConfigError("landscape_scan: resolution must be >= 2");
    if (half_range < 0.0) throw ConfigError("landscape_scan: negative range");

    LandscapeGrid grid;
    grid.center = theta_star;
    grid.half_range = half_range;
    grid.resolution = resolution;
    if (mode == DirectionMode::FirstTwoCoords) {
        if (d < 2) throw ConfigError("landscape_scan: need >= 2 parameters for coordinate slice");
        grid.direction_u.assign(d, 0.0);
        grid.direction_v.assign(d, 0.0);
        grid.direction_u[0] = 1.0;
        grid.direction_v[1] = 1.0;
    } else {
        Rng rng = Rng(seed).split(0x4C414E44ULL);  // landscape direction stream
        std::vector<double> u(d), v(d);
        for (auto& x : u) x = rng.normal();
        u = normalized(std::move(u));
        for (auto& x : v) x = rng.normal();
        double proj = 0.0;
        for (std::size_t i = 0; i < d; ++i) proj += u[i] * v[i];
        for (std::size_t i = 0; i < d; ++i) v[i] -= proj * u[i];
        grid.direction_u = std::move(u);
        grid.direction_v = normalized(std::move(v));
    }

    const auto res = static_cast<std::size_t>(resolution);
    grid.energies.assign(res * res, 0.0);
    auto offset = [&](int idx) {
        return -half_range + 2.0 * half_range * idx / (resolution - 1);
    };
    detail::parallel_for(res * res, jobs, [&](std::size_t cell) {
        const int i = static_cast<int>(cell / res);
        const int j = static_cast<int>(cell % res);
        const double x = offset(i);
        const double y = offset(j);
        std::vector<double> theta(d);
        for (std::size_t p = 0; p < d; ++p)
            theta[p] = theta_star[p] + x * grid.direction_u[p] + y * grid.direction_v[p];
        grid.energies[cell] = circuit.energy(theta, h);
    });
    return grid;
}

double stability(const ConvergenceTrace& trace, int window) {
    if (window < 1) throw ConfigError("stability: window must be >= 1");
    if (trace.energies.empty()) throw Error("stability: empty trace");
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(window),
                                                trace.energies.size());
    std::vector<double> tail(trace.energies.end() - static_cast<std::ptrdiff_t>(n),
                             trace.energies.end());
    return std::sqrt(population_variance(tail));
}

}  // namespace vqebench
