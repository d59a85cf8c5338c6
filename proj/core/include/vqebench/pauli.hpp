#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vqebench {

/// Tensor product of single-qubit Paulis over an n-qubit register.
/// Stored as X/Z bit masks (qubit k = bit k); a set bit in both masks
/// means Y on that qubit. n_qubits is capped at 24 by the simulator.
class PauliString {
public:
    PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    /// From letters, e.g. "IXYZ"; leftmost letter acts on qubit 0.
    static PauliString from_letters(std::string_view letters);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }

    char letter(int qubit) const;
    std::string letters() const;

    bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }

    /// Qubit indices carrying a non-identity letter, ascending.
    std::vector<int> support() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    auto operator<=>(const PauliString&) const = default;

private:
    int n_qubits_;
    std::uint64_t x_mask_;
    std::uint64_t z_mask_;
};

/// Weighted sum of Pauli strings with real coefficients. Terms are merged
/// and sorted on construction; merged coefficients with magnitude below
/// 1e-14 are dropped. Immutable after construction.
class PauliSum {
public:
    struct Term {
        double coefficient;
        PauliString string;

        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit PauliSum(int n_qubits);
    PauliSum(int n_qubits, std::vector<Term> terms);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Hv without materializing the 2^n x 2^n matrix; out is overwritten
    /// and need not be normalized afterwards.
    void apply(std::span<const std::complex<double>> v,
               std::span<std::complex<double>> out) const;

    friend bool operator==(const PauliSum&, const PauliSum&) = default;

private:
    int n_qubits_;
    std::vector<Term> terms_;
};

/// Parse the plain-text Hamiltonian format: one `<coefficient> <letters>`
/// term per line, `#` comments, blank lines ignored. Throws ParseError
/// with the offending line number.
PauliSum parse_hamiltonian(std::istream& in);
PauliSum parse_hamiltonian_file(const std::string& path);

/// Inverse of the parser; round-trips the term multiset exactly.
void write_hamiltonian(std::ostream& out, const PauliSum& h);
void write_hamiltonian_file(const std::string& path, const PauliSum& h);

/// Terms whose support is a single qubit or a nearest-neighbor pair
/// (|i - j| = 1). Identity terms are kept: they only shift the energy.
PauliSum extract_local(const PauliSum& h);

/// (1-s) * h_local + s * h_global, merged.
PauliSum interpolate(const PauliSum& h_local, const PauliSum& h_global, double s);

/// Built-in chain models for tests and benchmarks.
///   transverse_field_ising: -J sum Z_i Z_{i+1} - h sum X_i   (open chain)
///   heisenberg_xxz:          J sum (X X + Y Y + delta Z Z)   (open chain)
/// Couplings are listed bond by bond in ascending site order, field terms
/// after the couplings.
struct SpinModelParams {
    double J = 1.0;
    double h = 1.0;
    double delta = 0.5;
};
PauliSum builtin_hamiltonian(const std::string& name, int n_qubits,
                             const SpinModelParams& params = {});

}  // namespace vqebench
