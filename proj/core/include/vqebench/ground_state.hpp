#pragma once

#include <cstdint>
#include <vector>

#include "vqebench/pauli.hpp"
#include "vqebench/statevector.hpp"

namespace vqebench {

/// Smallest eigenpair of a Pauli-sum Hamiltonian.
struct GroundStateSolution {
    double energy;          // Hartree
    Statevector state;      // normalized eigenvector
    double residual_norm;   // ||Hv - Ev||
};

struct LanczosOptions {
    int max_krylov = 200;      // Krylov subspace cap per restart
    int max_restarts = 40;
    double tolerance = 1e-10;  // target residual, relative to max(1, |E|)
    std::uint64_t seed = 42;   // starting-vector stream
};

/// Matrix-free Lanczos with full reorthogonalization, restarted from the
/// best Ritz vector. Deterministic for a fixed seed. Throws NumericalError
/// if the residual contract (1e-8 * max(1, |E|)) cannot be met.
GroundStateSolution ground_state(const PauliSum& hamiltonian,
                                 const LanczosOptions& options = {});

/// Orthonormal basis of the ground eigenspace: repeated deflated Lanczos
/// solves, collecting eigenvectors whose eigenvalue lies within
/// degeneracy_tol of the minimum. Used for fidelity against degenerate
/// ground states.
std::vector<Statevector> ground_space(const PauliSum& hamiltonian,
                                      double degeneracy_tol = 1e-8,
                                      const LanczosOptions& options = {});

}  // namespace vqebench
