#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vqebench/errors.hpp"
#include "vqebench/methods.hpp"

using namespace vqebench;
namespace vt = vqebench::testing;

namespace {

SpsaConfig quick_cfg(int iterations) {
    SpsaConfig cfg = default_spsa_config();
    cfg.max_iterations = iterations;
    return cfg;
}

const PauliSum& tfim4() {
    static const PauliSum h = builtin_hamiltonian("transverse_field_ising", 4);
    return h;
}

}  // namespace

TEST_CASE("method names round-trip") {
    for (const auto& name : method_names())
        CHECK(method_name(method_from_name(name)) == name);
    CHECK(method_from_name("standard") == Method::Standard);
    CHECK(method_from_name("local_global") == Method::LocalGlobal);
    CHECK(method_from_name("adiabatic") == Method::Adiabatic);
    CHECK(method_from_name("sea") == Method::Sea);
    CHECK(method_from_name("pretrained") == Method::Pretrained);
    CHECK_THROWS_AS(method_from_name("unknown"), ConfigError);
}

TEST_CASE("standard run produces consistent metrics") {
    const Reference ref = make_reference(tfim4());
    const auto r = run_standard(tfim4(), 2, quick_cfg(60), {}, &ref);
    CHECK(r.trace.energies.size() == 60);
    CHECK(r.final_energy == doctest::Approx(expectation(r.final_state, tfim4())).epsilon(1e-12));
    CHECK(r.energy_error == doctest::Approx(std::abs(r.final_energy - ref.solution.energy)));
    CHECK(r.reference_energy == ref.solution.energy);
    CHECK(r.fidelity >= 0.0);
    CHECK(r.fidelity <= 1.0 + 1e-12);
    CHECK(r.stage_boundaries.empty());
    CHECK_FALSE(r.stability_truncated);
    // Variational bound: no trace energy below the ground energy.
    const double floor = ref.solution.energy - 1e-8;
    for (double e : r.trace.energies) CHECK(e >= floor);
}

TEST_CASE("runs are deterministic") {
    const Reference ref = make_reference(tfim4());
    const auto a = run_standard(tfim4(), 2, quick_cfg(40), {}, &ref);
    const auto b = run_standard(tfim4(), 2, quick_cfg(40), {}, &ref);
    CHECK(a.trace.energies == b.trace.energies);
    CHECK(a.trace.final_params == b.trace.final_params);
    CHECK(a.final_energy == b.final_energy);
}

TEST_CASE("local-global records a stage boundary and full-H energies") {
    const Reference ref = make_reference(tfim4());
    const auto r = run_local_global(tfim4(), 2, quick_cfg(60), 0.5, {}, &ref);
    CHECK(r.trace.energies.size() == 60);
    REQUIRE(r.stage_boundaries.size() == 1);
    CHECK(r.stage_boundaries[0] == 30);
    // Stage 1 optimizes the local operator, so trace energies there are
    // re-evaluated on the full Hamiltonian separately.
    CHECK(r.energies_on_full_h.size() == 60);
    const double floor = ref.solution.energy - 1e-8;
    for (double e : r.energies_on_full_h) CHECK(e >= floor);
}

TEST_CASE("local-global split edge cases collapse to one stage") {
    const Reference ref = make_reference(tfim4());
    const auto all_global = run_local_global(tfim4(), 1, quick_cfg(30), 0.0, {}, &ref);
    CHECK(all_global.stage_boundaries.empty());
    CHECK(all_global.trace.energies.size() == 30);
    const auto all_local = run_local_global(tfim4(), 1, quick_cfg(30), 1.0, {}, &ref);
    CHECK(all_local.stage_boundaries.empty());
}

TEST_CASE("adiabatic uses the requested number of interpolation stages") {
    const Reference ref = make_reference(tfim4());
    const auto r = run_adiabatic(tfim4(), 1, quick_cfg(50), 5, {}, &ref);
    CHECK(r.trace.energies.size() == 50);
    CHECK(r.stage_boundaries.size() == 4);  // 5 stages -> 4 boundaries
    CHECK(std::is_sorted(r.stage_boundaries.begin(), r.stage_boundaries.end()));
    CHECK(r.energies_on_full_h.size() == 50);
    CHECK_THROWS_AS(run_adiabatic(tfim4(), 1, quick_cfg(10), 0, {}, &ref), ConfigError);
}

TEST_CASE("sea run uses the SEA circuit parameter budget") {
    const Reference ref = make_reference(tfim4());
    const auto r = run_sea(tfim4(), 2, quick_cfg(40), {}, &ref);
    CHECK(r.trace.final_params.size() == 4u * 3u * 2u);  // n(d1+d2+d3), depth 2
    CHECK(r.trace.energies.size() == 40);
    // Dispatch scales SEA section depths with the layer budget: [L, L, L].
    const auto d = run_method(Method::Sea, tfim4(), 3, quick_cfg(10), {}, &ref);
    CHECK(d.trace.final_params.size() == 4u * 3u * 3u);
}

TEST_CASE("pretrained transfers MPS parameters into the full circuit") {
    const Reference ref = make_reference(tfim4());
    const auto r = run_pretrained(tfim4(), 2, quick_cfg(60), 0.5, {}, &ref);
    CHECK(r.trace.energies.size() == 60);
    REQUIRE(r.stage_boundaries.size() == 1);
    CHECK(r.stage_boundaries[0] == 30);
    // Final parameters live in the full EfficientSU2 space.
    CHECK(r.trace.final_params.size() == 2u * 4u * 2u + 2u * 4u);
    // split = 0 skips pretraining entirely.
    const auto direct = run_pretrained(tfim4(), 2, quick_cfg(20), 0.0, {}, &ref);
    CHECK(direct.stage_boundaries.empty());
    CHECK(direct.trace.final_params.size() == 2u * 4u * 2u + 2u * 4u);
    // split = 1 never leaves the MPS circuit.
    const auto mps_only = run_pretrained(tfim4(), 2, quick_cfg(20), 1.0, {}, &ref);
    CHECK(mps_only.stage_boundaries.empty());
    CHECK(mps_only.trace.final_params.size() == 2u * 4u + 4u * 3u);
}

TEST_CASE("dispatch covers every method") {
    const Reference ref = make_reference(tfim4());
    for (const auto& name : method_names()) {
        const auto r = run_method(method_from_name(name), tfim4(), 1, quick_cfg(25), {}, &ref);
        CHECK(r.trace.energies.size() == 25);
        CHECK(std::isfinite(r.final_energy));
        CHECK(r.method == method_from_name(name));
    }
}

TEST_CASE("compute_metrics handles degenerate ground spaces") {
    // -ZZ has ground space spanned by |00> and |11>.
    const PauliSum h(2, {{-1.0, PauliString::from_letters("ZZ")}});
    const Reference ref = make_reference(h);
    REQUIRE(ref.ground_basis.size() == 2);
    // |11> alone may have low overlap with the single Lanczos vector but
    // full weight inside the ground space.
    Statevector e11(2, {0, 0, 0, 1});
    ConvergenceTrace trace;
    trace.energies = std::vector<double>(25, -1.0);
    const auto m = compute_metrics(e11, trace, h, ref.solution, ref.ground_basis);
    CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(m.energy_error == doctest::Approx(0.0).scale(1.0));
    CHECK(m.stability == 0.0);
    CHECK_FALSE(m.stability_truncated);
}

TEST_CASE("short traces are flagged as truncated for the stability window") {
    const auto h = builtin_hamiltonian("transverse_field_ising", 2);
    const Reference ref = make_reference(h);
    const auto r = run_standard(h, 1, quick_cfg(5), {}, &ref);
    CHECK(r.stability_truncated);
}
