// Test-only oracles, kept independent of the implementation paths they
// check: dense matrix construction and diagonalization for small
// registers, and parameter-shift derivatives for rotation gates.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <vector>

#include "vqebench/ansatz.hpp"
#include "vqebench/pauli.hpp"
#include "vqebench/rng.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench::testing {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline DenseMatrix pauli_matrix(char letter) {
    DenseMatrix m(2, 2);
    switch (letter) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
    }
    return m;
}

/// Dense 2^n x 2^n matrix of a Pauli string; qubit 0 = least-significant
/// bit, so higher qubits go leftmost in the Kronecker product.
inline DenseMatrix dense_matrix(const PauliString& p) {
    DenseMatrix m = DenseMatrix::Identity(1, 1);
    for (int q = 0; q < p.n_qubits(); ++q) {
        const DenseMatrix factor = pauli_matrix(p.letter(q));
        DenseMatrix next(m.rows() * 2, m.cols() * 2);
        next.block(0, 0, m.rows(), m.cols()) = factor(0, 0) * m;
        next.block(0, m.cols(), m.rows(), m.cols()) = factor(0, 1) * m;
        next.block(m.rows(), 0, m.rows(), m.cols()) = factor(1, 0) * m;
        next.block(m.rows(), m.cols(), m.rows(), m.cols()) = factor(1, 1) * m;
        m = next;
    }
    return m;
}

inline DenseMatrix dense_matrix(const PauliSum& h) {
    const auto dim = static_cast<Eigen::Index>(1LL << h.n_qubits());
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (const auto& term : h.terms()) m += term.coefficient * dense_matrix(term.string);
    return m;
}

inline double dense_ground_energy(const PauliSum& h) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(dense_matrix(h));
    return es.eigenvalues()(0);
}

inline DenseVector to_eigen(const Statevector& s) {
    DenseVector v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
    return v;
}

/// Analytic derivative of the energy for rotation-gate parameters:
/// dE/dtheta_j = (E(theta + pi/2 e_j) - E(theta - pi/2 e_j)) / 2.
inline std::vector<double> parameter_shift_gradient(const AnsatzCircuit& circuit,
                                                    const PauliSum& h,
                                                    const std::vector<double>& theta) {
    std::vector<double> grad(theta.size());
    std::vector<double> work = theta;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        work[j] = theta[j] + std::numbers::pi / 2;
        const double ep = circuit.energy(work, h);
        work[j] = theta[j] - std::numbers::pi / 2;
        const double em = circuit.energy(work, h);
        work[j] = theta[j];
        grad[j] = (ep - em) / 2.0;
    }
    return grad;
}

/// Random Pauli sum with coefficients in [-1, 1].
inline PauliSum random_pauli_sum(int n_qubits, int n_terms, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<PauliSum::Term> terms;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (int t = 0; t < n_terms; ++t) {
        std::string s;
        for (int q = 0; q < n_qubits; ++q)
            s += letters[rng.uniform_index(4)];
        terms.push_back({rng.uniform(-1.0, 1.0), PauliString::from_letters(s)});
    }
    return PauliSum(n_qubits, std::move(terms));
}

/// Random normalized state.
inline Statevector random_state(int n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> amps(1ULL << n_qubits);
    for (auto& a : amps) a = cplx{rng.normal(), rng.normal()};
    Statevector s(n_qubits, std::move(amps));
    s.normalize();
    return s;
}

/// Random circuit over {Ry, Rz, CNOT} with one slot per rotation.
inline AnsatzCircuit random_circuit(int n_qubits, int n_gates, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Gate> gates;
    int slot = 0;
    for (int g = 0; g < n_gates; ++g) {
        const auto kind = rng.uniform_index(3);
        const int q = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_qubits)));
        if (kind == 2 && n_qubits > 1) {
            int t = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n_qubits - 1)));
            if (t >= q) ++t;
            gates.push_back({GateKind::Cnot, q, t, -1});
        } else {
            gates.push_back({kind == 0 ? GateKind::Ry : GateKind::Rz, q, -1, slot++});
        }
    }
    if (slot == 0) {
        gates.push_back({GateKind::Ry, 0, -1, slot++});
    }
    return AnsatzCircuit("random", n_qubits, std::move(gates), slot);
}

}  // namespace vqebench::testing
