#include <numbers>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "vqebench/ansatz.hpp"
#include "vqebench/errors.hpp"

using namespace vqebench;
namespace vt = vqebench::testing;

namespace {

std::vector<std::pair<int, int>> cnot_pairs(const AnsatzCircuit& c) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& g : c.gates())
        if (g.kind == GateKind::Cnot) pairs.emplace_back(g.wire0, g.wire1);
    return pairs;
}

}  // namespace

TEST_CASE("EfficientSU2 parameter count is 2nL + 2n for n in [2,14], L in [0,50]") {
    for (int n = 2; n <= 14; ++n)
        for (int L : {0, 1, 2, 5, 17, 50}) {
            const auto c = build_efficient_su2(n, L);
            CHECK(c.n_params() == 2 * n * L + 2 * n);
            CHECK(c.n_qubits() == n);
        }
    CHECK(build_efficient_su2(14, 50).n_params() == 1428);
}

TEST_CASE("EfficientSU2 uses circular entanglement") {
    const auto c = build_efficient_su2(4, 1);
    const auto pairs = cnot_pairs(c);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == std::pair{0, 1});
    CHECK(pairs[1] == std::pair{1, 2});
    CHECK(pairs[2] == std::pair{2, 3});
    CHECK(pairs[3] == std::pair{3, 0});
    // Final rotation layer follows the last entangler.
    const auto& gates = c.gates();
    bool rotation_after_last_cnot = false;
    for (std::size_t i = gates.size(); i-- > 0;) {
        if (gates[i].kind == GateKind::Cnot) break;
        rotation_after_last_cnot = true;
    }
    CHECK(rotation_after_last_cnot);
}

TEST_CASE("EfficientSU2 at depth 0 is a single rotation layer") {
    const auto c = build_efficient_su2(3, 0);
    CHECK(c.n_params() == 6);
    CHECK(cnot_pairs(c).empty());
}

TEST_CASE("SEA parameter count is n(d1+d2+d3)") {
    for (int n : {2, 4, 8, 14})
        for (int d : {1, 2, 5, 50}) {
            const auto c = build_sea(n, {d, d, d});
            CHECK(c.n_params() == n * 3 * d);
        }
    CHECK(build_sea(14, {50, 50, 50}).n_params() == 2100);
}

TEST_CASE("SEA entangler sections use sparse, cross, half-register pairs") {
    const auto c = build_sea(6, {1, 1, 1});
    const auto pairs = cnot_pairs(c);
    const std::vector<std::pair<int, int>> expect = {
        {0, 1}, {2, 3}, {4, 5},          // sparse
        {0, 2}, {2, 4},                  // cross
        {0, 3}, {1, 4}, {2, 5},          // half-register (i, i + n/2)
    };
    CHECK(pairs == expect);
}

TEST_CASE("MPS parameter count is 2n + 4(n-1) at bond dimension 2") {
    for (int n = 2; n <= 14; ++n) {
        const auto c = build_mps(n, 2);
        CHECK(c.n_params() == 2 * n + 4 * (n - 1));
    }
    CHECK(build_mps(14, 2).n_params() == 80);
    CHECK_THROWS_AS(build_mps(4, 3), ConfigError);
}

TEST_CASE("evaluate with all-zero parameters leaves |0...0> fixed for Ry-entangler circuits") {
    // Ry(0) = Rz(0) = identity up to global phase on |0>, and CNOT fixes |0...0>.
    for (const auto& c : {build_efficient_su2(4, 2), build_sea(4, {2, 1, 1}), build_mps(4, 2)}) {
        const std::vector<double> zeros(static_cast<std::size_t>(c.n_params()), 0.0);
        const auto s = c.evaluate(zeros);
        CHECK(std::abs(std::abs(s.amplitudes()[0]) - 1.0) < 1e-12);
    }
}

TEST_CASE("apply_range composes to evaluate") {
    const auto c = build_efficient_su2(3, 2);
    Rng rng(4);
    std::vector<double> theta(static_cast<std::size_t>(c.n_params()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);
    const auto full = c.evaluate(theta);
    Statevector s(3);
    const std::size_t half = c.gates().size() / 2;
    c.apply_range(s, theta, 0, half);
    c.apply_range(s, theta, half, c.gates().size());
    for (std::size_t i = 0; i < s.dim(); ++i)
        CHECK(std::abs(s.amplitudes()[i] - full.amplitudes()[i]) < 1e-13);
}

TEST_CASE("first_gate_of_slot points at the gate consuming each slot") {
    const auto c = build_efficient_su2(2, 1);
    const auto& firsts = c.first_gate_of_slot();
    REQUIRE(static_cast<int>(firsts.size()) == c.n_params());
    for (int slot = 0; slot < c.n_params(); ++slot) {
        const auto& g = c.gates()[firsts[static_cast<std::size_t>(slot)]];
        CHECK(g.slot == slot);
        // No earlier gate reads this slot.
        for (std::size_t i = 0; i < firsts[static_cast<std::size_t>(slot)]; ++i)
            CHECK(c.gates()[i].slot != slot);
    }
}

TEST_CASE("constructor validates slots and wires") {
    // Gap in slot numbering.
    CHECK_THROWS_AS(AnsatzCircuit("bad", 2,
                                  {{GateKind::Ry, 0, -1, 0}, {GateKind::Ry, 1, -1, 2}}, 3),
                    ConfigError);
    // Wire out of range.
    CHECK_THROWS_AS(AnsatzCircuit("bad", 2, {{GateKind::Ry, 5, -1, 0}}, 1), IndexError);
    // Parameter size mismatch at evaluation.
    const auto c = build_efficient_su2(2, 1);
    CHECK_THROWS_AS(c.evaluate(std::vector<double>(3)), ShapeError);
}

TEST_CASE("energy agrees with evaluate + expectation") {
    const auto c = build_sea(3, {1, 1, 1});
    const auto h = vt::random_pauli_sum(3, 6, 88);
    Rng rng(6);
    std::vector<double> theta(static_cast<std::size_t>(c.n_params()));
    for (auto& t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);
    CHECK(c.energy(theta, h) ==
          doctest::Approx(expectation(c.evaluate(theta), h)).epsilon(1e-13));
}

TEST_CASE("circuit summary names the builder and sizes") {
    std::ostringstream out;
    write_circuit_summary(out, build_mps(4, 2));
    const auto text = out.str();
    CHECK(text.find("mps") != std::string::npos);
    CHECK(text.find("4") != std::string::npos);
}
