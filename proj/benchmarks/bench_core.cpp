// Microbenchmarks for the hot paths: gate kernels, Pauli-sum expectation,
// the matrix-free H*v product, and one full SPSA step worth of energy
// evaluations. Run with --benchmark_filter=... to narrow.
#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "vqebench/ansatz.hpp"
#include "vqebench/pauli.hpp"
#include "vqebench/rng.hpp"
#include "vqebench/spsa.hpp"
#include "vqebench/statevector.hpp"

using namespace vqebench;

namespace {

Statevector random_state(int n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> amps(1ULL << n_qubits);
    for (auto& a : amps) a = cplx{rng.normal(), rng.normal()};
    Statevector s(n_qubits, std::move(amps));
    s.normalize();
    return s;
}

void bm_apply_ry(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s = random_state(n, 1);
    int wire = 0;
    for (auto _ : state) {
        s.apply_ry(wire, 0.013);
        wire = (wire + 1) % n;
        benchmark::DoNotOptimize(s.amplitudes_mut().data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

void bm_apply_cnot(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s = random_state(n, 2);
    int wire = 0;
    for (auto _ : state) {
        s.apply_cnot(wire, (wire + 1) % n);
        wire = (wire + 1) % n;
        benchmark::DoNotOptimize(s.amplitudes_mut().data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << n));
}

void bm_expectation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto h = builtin_hamiltonian("heisenberg_xxz", n);
    const Statevector s = random_state(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(s, h));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(h.size()) * (1LL << n));
}

void bm_pauli_sum_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto h = builtin_hamiltonian("heisenberg_xxz", n);
    const Statevector s = random_state(n, 4);
    std::vector<cplx> out(s.dim());
    for (auto _ : state) {
        h.apply(s.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(h.size()) * (1LL << n));
}

void bm_circuit_energy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int layers = static_cast<int>(state.range(1));
    const auto h = builtin_hamiltonian("heisenberg_xxz", n);
    const auto circuit = build_efficient_su2(n, layers);
    Rng rng(5);
    std::vector<double> theta(static_cast<std::size_t>(circuit.n_params()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circuit.energy(theta, h));
    }
}

void bm_spsa_step(benchmark::State& state) {
    // One SPSA iteration = two objective evaluations plus the trace
    // evaluation, on a mid-sized circuit.
    const int n = 8;
    const auto h = builtin_hamiltonian("heisenberg_xxz", n);
    const auto circuit = build_efficient_su2(n, 5);
    SpsaConfig cfg = default_spsa_config();
    cfg.max_iterations = 1;
    const auto theta0 = gaussian_init(circuit.n_params(), 0.01, 42);
    const Objective objective = [&](const std::vector<double>& p) {
        return circuit.energy(p, h);
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(spsa_minimize(objective, theta0, cfg));
    }
}

BENCHMARK(bm_apply_ry)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_apply_cnot)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_expectation)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_pauli_sum_apply)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_circuit_energy)->Args({8, 5})->Args({12, 5})->Args({12, 30});
BENCHMARK(bm_spsa_step);

}  // namespace

BENCHMARK_MAIN();
