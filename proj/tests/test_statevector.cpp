#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/statevector.hpp"

using namespace vqebench;
namespace vt = vqebench::testing;

TEST_CASE("zero state is |0...0>") {
    Statevector s(3);
    CHECK(s.dim() == 8);
    CHECK(s.amplitudes()[0] == cplx{1.0, 0.0});
    for (std::size_t i = 1; i < s.dim(); ++i) CHECK(s.amplitudes()[i] == cplx{0.0, 0.0});
    CHECK(s.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("Ry rotates |0> into cos/sin superposition") {
    const double theta = 0.7;
    Statevector s(1);
    s.apply_ry(0, theta);
    CHECK(s.amplitudes()[0].real() == doctest::Approx(std::cos(theta / 2)).epsilon(1e-14));
    CHECK(s.amplitudes()[1].real() == doctest::Approx(std::sin(theta / 2)).epsilon(1e-14));
    CHECK(s.amplitudes()[0].imag() == doctest::Approx(0.0));
    CHECK(s.amplitudes()[1].imag() == doctest::Approx(0.0));
}

TEST_CASE("Ry(pi) maps |0> to |1>") {
    Statevector s(2);
    s.apply_ry(1, std::numbers::pi);
    CHECK(std::abs(s.amplitudes()[2] - cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("Rz applies opposite phases to |0> and |1>") {
    Statevector s(1);
    s.apply_ry(0, std::numbers::pi / 2);  // (|0> + |1>)/sqrt(2)
    const double phi = 1.3;
    s.apply_rz(0, phi);
    const cplx e0 = std::exp(cplx{0, -phi / 2}) / std::sqrt(2.0);
    const cplx e1 = std::exp(cplx{0, +phi / 2}) / std::sqrt(2.0);
    CHECK(std::abs(s.amplitudes()[0] - e0) < 1e-14);
    CHECK(std::abs(s.amplitudes()[1] - e1) < 1e-14);
}

TEST_CASE("CNOT permutes basis states, control = qubit 0") {
    Statevector s(2);
    s.apply_ry(0, std::numbers::pi);  // |01> in (q1 q0) order -> index 1
    s.apply_cnot(0, 1);
    CHECK(std::abs(std::abs(s.amplitudes()[3]) - 1.0) < 1e-14);  // |11>
}

TEST_CASE("norm is preserved across 100 random gates") {
    auto circuit = vt::random_circuit(4, 100, 777);
    Rng rng(101);
    std::vector<double> theta(static_cast<std::size_t>(circuit.n_params()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);
    Statevector s = circuit.evaluate(theta);
    CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gates invert: Ry/Rz by negated angle, CNOT by itself") {
    Statevector s = vt::random_state(3, 5);
    const Statevector original = s;
    s.apply_ry(1, 0.9);
    s.apply_rz(2, -1.4);
    s.apply_cnot(0, 2);
    s.apply_cnot(0, 2);
    s.apply_rz(2, 1.4);
    s.apply_ry(1, -0.9);
    for (std::size_t i = 0; i < s.dim(); ++i)
        CHECK(std::abs(s.amplitudes()[i] - original.amplitudes()[i]) < 1e-13);
}

TEST_CASE("expectation matches dense <v, Hv> on random inputs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto h = vt::random_pauli_sum(3, 6, 100 + seed);
        const auto v = vt::random_state(3, 200 + seed);
        const auto dense = vt::dense_matrix(h);
        const auto ev = vt::to_eigen(v);
        const double expect = (ev.adjoint() * dense * ev)(0).real();
        CHECK(expectation(v, h) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("apply_pauli_sum matches dense matrix-vector product") {
    const auto h = vt::random_pauli_sum(4, 8, 11);
    const auto v = vt::random_state(4, 12);
    const auto out = apply_pauli_sum(h, v);
    const vt::DenseVector dense_out = vt::dense_matrix(h) * vt::to_eigen(v);
    for (std::size_t i = 0; i < out.size(); ++i)
        CHECK(std::abs(out[i] - dense_out(static_cast<Eigen::Index>(i))) < 1e-12);
}

TEST_CASE("fidelity and inner product are consistent") {
    const auto a = vt::random_state(3, 21);
    const auto b = vt::random_state(3, 22);
    const cplx ip = inner_product(a, b);
    CHECK(fidelity(a, b) == doctest::Approx(std::norm(ip)).epsilon(1e-13));
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("wire bounds are enforced") {
    Statevector s(2);
    CHECK_THROWS_AS(s.apply_ry(2, 0.1), IndexError);
    CHECK_THROWS_AS(s.apply_rz(-1, 0.1), IndexError);
    CHECK_THROWS_AS(s.apply_cnot(0, 0), IndexError);
    CHECK_THROWS_AS(s.apply_cnot(0, 5), IndexError);
}

TEST_CASE("register size limits") {
    CHECK_THROWS_AS(Statevector(0), ConfigError);
    CHECK_THROWS_AS(Statevector(25), ConfigError);
    CHECK_THROWS_AS(Statevector(2, std::vector<cplx>(3)), ShapeError);
}
