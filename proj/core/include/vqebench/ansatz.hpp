#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vqebench/pauli.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

enum class GateKind { Ry, Rz, Cnot };

/// One gate of a parameterized circuit. Rotation gates carry a parameter
/// slot index; CNOT gates have slot = -1 and use both wires.
struct Gate {
    GateKind kind;
    int wire0;       // rotation target, or CNOT control
    int wire1 = -1;  // CNOT target
    int slot = -1;   // parameter slot, -1 for unparameterized
};

/// Ordered parameterized gate program. Immutable after construction;
/// evaluation is pure, so independent parameter sets can be evaluated
/// concurrently.
class AnsatzCircuit {
public:
    AnsatzCircuit(std::string name, int n_qubits, std::vector<Gate> gates, int n_params);

    const std::string& name() const { return name_; }
    int n_qubits() const { return n_qubits_; }
    int n_params() const { return n_params_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// U(theta)|0...0>.
    Statevector evaluate(std::span<const double> params) const;

    /// <psi(theta)| h |psi(theta)>.
    double energy(std::span<const double> params, const PauliSum& h) const;

    /// Apply gates [first, last) to an existing state.
    void apply_range(Statevector& state, std::span<const double> params,
                     std::size_t first, std::size_t last) const;

    /// Index of the first gate that reads each parameter slot.
    const std::vector<std::size_t>& first_gate_of_slot() const { return first_gate_of_slot_; }

private:
    std::string name_;
    int n_qubits_;
    std::vector<Gate> gates_;
    int n_params_;
    std::vector<std::size_t> first_gate_of_slot_;
};

/// Rotation-layer counts for the three sections of the SEA circuit.
struct SeaDepthConfig {
    int d1 = 1;
    int d2 = 1;
    int d3 = 1;
};

/// EfficientSU2: per layer Ry+Rz on every qubit then circular CNOTs
/// (i -> (i+1) mod n); one final rotation layer after the last entangler.
/// n_params = 2nL + 2n.
AnsatzCircuit build_efficient_su2(int n_qubits, int layers);

/// SEA: d1 Ry layers, sparse entangler on pairs (0,1),(2,3),...; d2 Rz
/// layers, cross entangler on (0,2),(2,4),...; d3 Ry layers, half-register
/// entangler (i, i + floor(n/2)). n_params = n(d1+d2+d3).
AnsatzCircuit build_sea(int n_qubits, const SeaDepthConfig& cfg);

/// MPS-inspired circuit at bond dimension 2: initial Ry+Rz on every qubit,
/// then forward and backward sweeps of CNOT-wrapped two-qubit blocks with
/// two Ry parameters each. n_params = 2n + 4(n-1). Only bond_dim = 2 is
/// supported.
AnsatzCircuit build_mps(int n_qubits, int bond_dim);

/// Structured-text summary (builder, sizes, gate count) for reports.
void write_circuit_summary(std::ostream& out, const AnsatzCircuit& circuit);

}  // namespace vqebench
