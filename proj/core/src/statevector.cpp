#include "vqebench/statevector.hpp"

#include <bit>
#include <cmath>

#include "vqebench/errors.hpp"

namespace vqebench {

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 24)
        throw ConfigError("Statevector: n_qubits out of range [1, 24]");
    amplitudes_.assign(1ULL << n_qubits, cplx{0.0, 0.0});
    amplitudes_[0] = cplx{1.0, 0.0};
}

Statevector::Statevector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 24)
        throw ConfigError("Statevector: n_qubits out of range [1, 24]");
    if (amplitudes_.size() != (1ULL << n_qubits))
        throw ShapeError("Statevector: amplitude count is not 2^n_qubits");
}

void Statevector::check_wire(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_)
        throw IndexError("Statevector: qubit index out of range");
}

void Statevector::apply_ry(int qubit, double angle) {
    check_wire(qubit);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t mask = 1ULL << qubit;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const std::size_t j = i | mask;
        const cplx a0 = amplitudes_[i];
        const cplx a1 = amplitudes_[j];
        amplitudes_[i] = c * a0 - s * a1;
        amplitudes_[j] = s * a0 + c * a1;
    }
}

void Statevector::apply_rz(int qubit, double angle) {
    check_wire(qubit);
    const cplx p0{std::cos(angle / 2.0), -std::sin(angle / 2.0)};
    const cplx p1 = std::conj(p0);
    const std::size_t mask = 1ULL << qubit;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i)
        amplitudes_[i] *= (i & mask) ? p1 : p0;
}

void Statevector::apply_cnot(int control, int target) {
    check_wire(control);
    check_wire(target);
    if (control == target)
        throw IndexError("Statevector: CNOT control equals target");
    const std::size_t cm = 1ULL << control;
    const std::size_t tm = 1ULL << target;
    const std::size_t dim = amplitudes_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cm) && !(i & tm)) std::swap(amplitudes_[i], amplitudes_[i | tm]);
    }
}

double Statevector::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amplitudes_) n += std::norm(a);
    return n;
}

void Statevector::normalize() {
    const double inv = 1.0 / std::sqrt(norm_sq());
    for (auto& a : amplitudes_) a *= inv;
}

Statevector zero_state(int n_qubits) { return Statevector(n_qubits); }

double expectation(const Statevector& state, const PauliSum& hamiltonian) {
    if (state.n_qubits() != hamiltonian.n_qubits())
        throw ShapeError("expectation: qubit count mismatch");
    const auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    cplx total{0.0, 0.0};
    for (const auto& term : hamiltonian.terms()) {
        const std::uint64_t x = term.string.x_mask();
        const std::uint64_t z = term.string.z_mask();
        const int n_y = std::popcount(x & z);
        static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const cplx scale = term.coefficient * kIPow[n_y & 3];
        cplx acc{0.0, 0.0};
        if (x == 0) {
            // Diagonal term: sum of signed probabilities.
            double d = 0.0;
            for (std::uint64_t b = 0; b < dim; ++b) {
                const double p = std::norm(amps[b]);
                d += (std::popcount(b & z) & 1) ? -p : p;
            }
            acc = d;
        } else {
            for (std::uint64_t b = 0; b < dim; ++b) {
                const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
                acc += sign * std::conj(amps[b ^ x]) * amps[b];
            }
        }
        total += scale * acc;
    }
    if (std::abs(total.imag()) > 1e-10)
        throw NumericalError("expectation: imaginary residue exceeds 1e-10");
    return total.real();
}

std::vector<cplx> apply_pauli_sum(const PauliSum& hamiltonian, const Statevector& v) {
    if (v.n_qubits() != hamiltonian.n_qubits())
        throw ShapeError("apply_pauli_sum: qubit count mismatch");
    std::vector<cplx> out(v.dim());
    hamiltonian.apply(v.amplitudes(), out);
    return out;
}

cplx inner_product(const Statevector& a, const Statevector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw ShapeError("inner_product: qubit count mismatch");
    const auto va = a.amplitudes();
    const auto vb = b.amplitudes();
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < va.size(); ++i) acc += std::conj(va[i]) * vb[i];
    return acc;
}

double fidelity(const Statevector& a, const Statevector& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace vqebench
