#include "vqebench/ground_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"

namespace vqebench {

namespace {

using Vec = std::vector<cplx>;

double norm_of(const Vec& v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return std::sqrt(s);
}

cplx dot(const Vec& a, const Vec& b) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

void axpy(const cplx& alpha, const Vec& x, Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vec& v, double s) {
    for (auto& a : v) a *= s;
}

/// Remove the components of v along each (orthonormal) basis vector.
void project_out(const std::vector<Vec>& basis, Vec& v) {
    for (const auto& u : basis) axpy(-dot(u, v), u, v);
}

Vec random_start(std::size_t dim, Rng& rng, const std::vector<Vec>& deflated) {
    Vec v(dim);
    for (auto& a : v) a = cplx{rng.normal(), rng.normal()};
    project_out(deflated, v);
    const double n = norm_of(v);
    if (n < 1e-12) throw NumericalError("lanczos: degenerate start vector");
    scale(v, 1.0 / n);
    return v;
}

struct LanczosResult {
    double energy;
    Vec vector;
    double residual;
};

/// One restarted Lanczos solve for the smallest eigenpair of H restricted
/// to the orthogonal complement of `deflated`.
LanczosResult lanczos_lowest(const PauliSum& h, const LanczosOptions& opt,
                             const std::vector<Vec>& deflated, Rng& rng) {
    const std::size_t dim = 1ULL << h.n_qubits();
    const int free_dim = static_cast<int>(dim) - static_cast<int>(deflated.size());
    const int max_k = std::min<int>(opt.max_krylov, free_dim);
    if (max_k < 1) throw NumericalError("lanczos: deflated space exhausts the register");

    Vec v0 = random_start(dim, rng, deflated);
    double best_energy = 0.0;
    double best_residual = std::numeric_limits<double>::infinity();
    Vec best_vector;

    for (int restart = 0; restart < opt.max_restarts; ++restart) {
        std::vector<Vec> basis;
        std::vector<double> alpha, beta;
        basis.push_back(v0);
        Vec w(dim);
        bool invariant = false;

        for (int j = 0; j < max_k; ++j) {
            h.apply(basis[static_cast<std::size_t>(j)], w);
            project_out(deflated, w);
            const double a = dot(basis[static_cast<std::size_t>(j)], w).real();
            alpha.push_back(a);
            axpy(-a, basis[static_cast<std::size_t>(j)], w);
            if (j > 0) axpy(-beta[static_cast<std::size_t>(j - 1)], basis[static_cast<std::size_t>(j - 1)], w);
            // Full reorthogonalization, twice for stability.
            project_out(basis, w);
            project_out(basis, w);
            const double b = norm_of(w);
            if (b < 1e-12 || j + 1 == max_k) {
                invariant = b < 1e-12;
                break;
            }
            beta.push_back(b);
            scale(w, 1.0 / b);
            basis.push_back(w);
        }

        const int k = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            tri(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        const Eigen::VectorXd y = es.eigenvectors().col(0);

        Vec ritz(dim, cplx{0.0, 0.0});
        for (int i = 0; i < k; ++i) axpy(y(i), basis[static_cast<std::size_t>(i)], ritz);
        project_out(deflated, ritz);
        const double rn = norm_of(ritz);
        if (rn < 1e-12) throw NumericalError("lanczos: Ritz vector collapsed under deflation");
        scale(ritz, 1.0 / rn);

        h.apply(ritz, w);
        project_out(deflated, w);
        const double energy = dot(ritz, w).real();
        axpy(-energy, ritz, w);
        const double residual = norm_of(w);

        if (residual < best_residual) {
            best_residual = residual;
            best_energy = energy;
            best_vector = ritz;
        }
        if (residual < opt.tolerance * std::max(1.0, std::abs(energy)))
            return {energy, std::move(ritz), residual};
        if (invariant && residual < 1e-9 * std::max(1.0, std::abs(energy)))
            return {energy, std::move(ritz), residual};
        v0 = best_vector;
    }
    if (best_residual < 1e-8 * std::max(1.0, std::abs(best_energy)))
        return {best_energy, std::move(best_vector), best_residual};
    throw NumericalError("lanczos: no convergence after max restarts, best residual " +
                         std::to_string(best_residual));
}

}  // namespace

GroundStateSolution ground_state(const PauliSum& hamiltonian, const LanczosOptions& options) {
    Rng rng(options.seed);
    auto r = lanczos_lowest(hamiltonian, options, {}, rng);
    Statevector state(hamiltonian.n_qubits(), std::move(r.vector));
    return {r.energy, std::move(state), r.residual};
}

std::vector<Statevector> ground_space(const PauliSum& hamiltonian, double degeneracy_tol,
                                      const LanczosOptions& options) {
    constexpr int kMaxMultiplicity = 8;
    Rng rng(options.seed);
    std::vector<Vec> found;
    double e0 = 0.0;
    for (int m = 0; m < kMaxMultiplicity; ++m) {
        LanczosResult r = lanczos_lowest(hamiltonian, options, found, rng);
        if (m == 0) {
            e0 = r.energy;
        } else if (r.energy - e0 > degeneracy_tol * std::max(1.0, std::abs(e0))) {
            break;
        }
        found.push_back(std::move(r.vector));
        if (found.size() >= (1ULL << hamiltonian.n_qubits())) break;
    }
    std::vector<Statevector> basis;
    basis.reserve(found.size());
    for (auto& v : found) basis.emplace_back(hamiltonian.n_qubits(), std::move(v));
    return basis;
}

}  // namespace vqebench
