#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vqebench/pauli.hpp"

namespace vqebench {

using cplx = std::complex<double>;

/// Dense amplitude vector over n qubits. Qubit 0 is the least-significant
/// bit of the amplitude index. Gate application mutates in place; all
/// other operations are const.
class Statevector {
public:
    /// |0...0> on n qubits, 1 <= n <= 24.
    explicit Statevector(int n_qubits);

    /// Adopt an existing amplitude vector (size must be a power of two).
    Statevector(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::span<cplx> amplitudes_mut() { return amplitudes_; }

    /// exp(-i angle Y / 2) on the target wire.
    void apply_ry(int qubit, double angle);
    /// exp(-i angle Z / 2) on the target wire.
    void apply_rz(int qubit, double angle);
    void apply_cnot(int control, int target);

    double norm_sq() const;
    void normalize();

private:
    void check_wire(int qubit) const;

    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

/// |0...0> on n qubits.
Statevector zero_state(int n_qubits);

/// <psi| H |psi>. The imaginary part of the raw sum is checked against
/// 1e-10 (coefficients are real, so a larger residue indicates a bug).
double expectation(const Statevector& state, const PauliSum& hamiltonian);

/// H|v> as a fresh (generally unnormalized) amplitude vector.
std::vector<cplx> apply_pauli_sum(const PauliSum& hamiltonian, const Statevector& v);

/// |<a|b>|^2.
double fidelity(const Statevector& a, const Statevector& b);

/// <a|b>.
cplx inner_product(const Statevector& a, const Statevector& b);

}  // namespace vqebench
