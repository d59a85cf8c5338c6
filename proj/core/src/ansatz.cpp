#include "vqebench/ansatz.hpp"

#include <ostream>

#include "vqebench/errors.hpp"

namespace vqebench {

AnsatzCircuit::AnsatzCircuit(std::string name, int n_qubits, std::vector<Gate> gates,
                             int n_params)
    : name_(std::move(name)), n_qubits_(n_qubits), gates_(std::move(gates)), n_params_(n_params) {
    first_gate_of_slot_.assign(static_cast<std::size_t>(n_params), gates_.size());
    std::vector<bool> used(static_cast<std::size_t>(n_params), false);
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        const Gate& gate = gates_[g];
        if (gate.wire0 < 0 || gate.wire0 >= n_qubits ||
            (gate.kind == GateKind::Cnot && (gate.wire1 < 0 || gate.wire1 >= n_qubits)))
            throw IndexError("AnsatzCircuit: wire index out of range");
        if (gate.kind != GateKind::Cnot) {
            if (gate.slot < 0 || gate.slot >= n_params)
                throw ConfigError("AnsatzCircuit: parameter slot out of range");
            const auto s = static_cast<std::size_t>(gate.slot);
            used[s] = true;
            if (g < first_gate_of_slot_[s]) first_gate_of_slot_[s] = g;
        }
    }
    for (bool u : used)
        if (!u) throw ConfigError("AnsatzCircuit: unused parameter slot");
}

void AnsatzCircuit::apply_range(Statevector& state, std::span<const double> params,
                                std::size_t first, std::size_t last) const {
    for (std::size_t g = first; g < last; ++g) {
        const Gate& gate = gates_[g];
        switch (gate.kind) {
            case GateKind::Ry:
                state.apply_ry(gate.wire0, params[static_cast<std::size_t>(gate.slot)]);
                break;
            case GateKind::Rz:
                state.apply_rz(gate.wire0, params[static_cast<std::size_t>(gate.slot)]);
                break;
            case GateKind::Cnot:
                state.apply_cnot(gate.wire0, gate.wire1);
                break;
        }
    }
}

Statevector AnsatzCircuit::evaluate(std::span<const double> params) const {
    if (params.size() != static_cast<std::size_t>(n_params_))
        throw ShapeError("AnsatzCircuit::evaluate: parameter count mismatch");
    Statevector state(n_qubits_);
    apply_range(state, params, 0, gates_.size());
    return state;
}

double AnsatzCircuit::energy(std::span<const double> params, const PauliSum& h) const {
    return expectation(evaluate(params), h);
}

namespace {

void rotation_layer(std::vector<Gate>& gates, int n, GateKind kind, int& slot) {
    for (int q = 0; q < n; ++q) gates.push_back({kind, q, -1, slot++});
}

}  // namespace

AnsatzCircuit build_efficient_su2(int n_qubits, int layers) {
    if (n_qubits < 2) throw ConfigError("build_efficient_su2: n_qubits must be >= 2");
    if (layers < 0) throw ConfigError("build_efficient_su2: layers must be >= 0");
    std::vector<Gate> gates;
    int slot = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) {
            gates.push_back({GateKind::Ry, q, -1, slot++});
            gates.push_back({GateKind::Rz, q, -1, slot++});
        }
        for (int q = 0; q < n_qubits; ++q)
            gates.push_back({GateKind::Cnot, q, (q + 1) % n_qubits, -1});
    }
    for (int q = 0; q < n_qubits; ++q) {
        gates.push_back({GateKind::Ry, q, -1, slot++});
        gates.push_back({GateKind::Rz, q, -1, slot++});
    }
    return AnsatzCircuit("efficient_su2", n_qubits, std::move(gates), slot);
}

AnsatzCircuit build_sea(int n_qubits, const SeaDepthConfig& cfg) {
    if (n_qubits < 2) throw ConfigError("build_sea: n_qubits must be >= 2");
    if (cfg.d1 < 0 || cfg.d2 < 0 || cfg.d3 < 0)
        throw ConfigError("build_sea: negative depth");
    if (cfg.d1 + cfg.d2 + cfg.d3 < 1)
        throw ConfigError("build_sea: at least one section depth must be positive");
    std::vector<Gate> gates;
    int slot = 0;
    for (int d = 0; d < cfg.d1; ++d) rotation_layer(gates, n_qubits, GateKind::Ry, slot);
    for (int q = 0; q + 1 < n_qubits; q += 2)
        gates.push_back({GateKind::Cnot, q, q + 1, -1});
    for (int d = 0; d < cfg.d2; ++d) rotation_layer(gates, n_qubits, GateKind::Rz, slot);
    for (int q = 0; q + 2 < n_qubits; q += 2)
        gates.push_back({GateKind::Cnot, q, q + 2, -1});
    for (int d = 0; d < cfg.d3; ++d) rotation_layer(gates, n_qubits, GateKind::Ry, slot);
    const int half = n_qubits / 2;
    for (int q = 0; q < half; ++q)
        gates.push_back({GateKind::Cnot, q, q + half, -1});
    return AnsatzCircuit("sea", n_qubits, std::move(gates), slot);
}

AnsatzCircuit build_mps(int n_qubits, int bond_dim) {
    if (n_qubits < 2) throw ConfigError("build_mps: n_qubits must be >= 2");
    if (bond_dim != 2)
        throw ConfigError("build_mps: only bond dimension 2 is supported");
    std::vector<Gate> gates;
    int slot = 0;
    for (int q = 0; q < n_qubits; ++q) {
        gates.push_back({GateKind::Ry, q, -1, slot++});
        gates.push_back({GateKind::Rz, q, -1, slot++});
    }
    auto block = [&](int i) {
        gates.push_back({GateKind::Cnot, i, i + 1, -1});
        gates.push_back({GateKind::Ry, i, -1, slot++});
        gates.push_back({GateKind::Ry, i + 1, -1, slot++});
        gates.push_back({GateKind::Cnot, i, i + 1, -1});
    };
    for (int i = 0; i + 1 < n_qubits; ++i) block(i);          // forward sweep
    for (int i = n_qubits - 2; i >= 0; --i) block(i);         // backward sweep
    return AnsatzCircuit("mps", n_qubits, std::move(gates), slot);
}

void write_circuit_summary(std::ostream& out, const AnsatzCircuit& circuit) {
    int rotations = 0, cnots = 0;
    for (const auto& g : circuit.gates())
        (g.kind == GateKind::Cnot ? cnots : rotations)++;
    out << "builder " << circuit.name() << '\n'
        << "n_qubits " << circuit.n_qubits() << '\n'
        << "n_params " << circuit.n_params() << '\n'
        << "rotation_gates " << rotations << '\n'
        << "cnot_gates " << cnots << '\n'
        << "total_gates " << circuit.gates().size() << '\n';
}

}  // namespace vqebench
