#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qdel/errors.hpp"
#include "qdel/random.hpp"
#include "qdel/sim/density.hpp"
#include "qdel/sim/gate.hpp"
#include "qdel/sim/state_vector.hpp"
#include "support/dense_oracle.hpp"

using namespace qdel;
using namespace qdel::sim;

namespace {

StateVector scrambled_state(int n, Rng& rng) {
    StateVector s;
    for (int q = 0; q < n; ++q) s.add_qubit(static_cast<QubitLabel>(q));
    for (int q = 0; q < n; ++q) {
        s.apply(make_gate(GateKind::RY, {static_cast<QubitLabel>(q)}, {rng.uniform(0.0, 3.0)}));
        s.apply(make_gate(GateKind::RZ, {static_cast<QubitLabel>(q)}, {rng.uniform(0.0, 3.0)}));
    }
    for (int q = 0; q + 1 < n; ++q)
        s.apply(make_gate(GateKind::CNOT,
                          {static_cast<QubitLabel>(q), static_cast<QubitLabel>(q + 1)}));
    for (int q = 0; q < n; ++q)
        s.apply(make_gate(GateKind::RX, {static_cast<QubitLabel>(q)}, {rng.uniform(0.0, 2.0)}));
    return s;
}

GateInstance random_instance(GateKind kind, int n, Rng& rng) {
    std::vector<QubitLabel> tg;
    while (static_cast<int>(tg.size()) < gate_arity(kind)) {
        auto q = static_cast<QubitLabel>(rng.below(static_cast<std::uint64_t>(n)));
        if (std::find(tg.begin(), tg.end(), q) == tg.end()) tg.push_back(q);
    }
    std::vector<double> params;
    if (gate_param_count(kind) == 1) params.push_back(rng.uniform(0.0, 6.28));
    return make_gate(kind, tg, params);
}

}  // namespace

TEST_CASE("every gate kind matches the dense-matrix oracle, both kernel paths") {
    const GateKind kinds[] = {GateKind::H,    GateKind::X,  GateKind::Y,   GateKind::Z,
                              GateKind::S,    GateKind::T,  GateKind::RX,  GateKind::RY,
                              GateKind::RZ,   GateKind::CNOT, GateKind::CZ, GateKind::SWAP,
                              GateKind::RZZ,  GateKind::CCZ, GateKind::CCX};
    Rng rng(41);
    const int n = 4;
    for (GateKind kind : kinds) {
        for (int rep = 0; rep < 3; ++rep) {
            const GateInstance g = random_instance(kind, n, rng);
            Rng prep(1000 + rep);
            StateVector serial = scrambled_state(n, prep);
            StateVector parallel = serial;
            serial.set_policy(ExecPolicy::Serial);
            parallel.set_policy(ExecPolicy::Parallel);

            const std::vector<oracle::Amp> before = oracle::aligned_amplitudes(serial);
            serial.apply(g);
            parallel.apply(g);

            const std::vector<oracle::Amp> want =
                oracle::apply(oracle::gate_unitary(g, n), before);
            CAPTURE(gate_name(kind));
            CHECK(oracle::max_abs_diff_up_to_phase(want, oracle::aligned_amplitudes(serial)) <
                  1e-12);
            CHECK(oracle::max_abs_diff_up_to_phase(want, oracle::aligned_amplitudes(parallel)) <
                  1e-12);
        }
    }
}

TEST_CASE("plus state: seeded replay is deterministic, frequencies follow the Born rule") {
    auto one_shot = [](std::uint64_t seed) {
        StateVector s;
        s.add_qubit(7);
        s.apply(make_gate(GateKind::H, {7}));
        Rng rng(seed);
        return s.measure_z(7, rng);
    };
    const MeasurementRecord first = one_shot(5);
    for (int rep = 0; rep < 5; ++rep) {
        const MeasurementRecord again = one_shot(5);
        CHECK(again.outcome == first.outcome);
        CHECK(again.probability == doctest::Approx(first.probability));
    }

    int ones = 0;
    const int shots = 10000;
    for (int t = 0; t < shots; ++t) ones += one_shot(900 + static_cast<std::uint64_t>(t)).outcome;
    const double freq = static_cast<double>(ones) / shots;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("measurement collapses and renormalizes") {
    Rng prep(3);
    StateVector s = scrambled_state(3, prep);
    Rng rng(11);
    const double p1 = s.prob_one(1);
    const MeasurementRecord rec = s.measure_z(1, rng);
    CHECK(rec.probability == doctest::Approx(rec.outcome ? p1 : 1.0 - p1));
    CHECK(s.norm() == doctest::Approx(1.0));
    CHECK(s.prob_one(1) == doctest::Approx(rec.outcome ? 1.0 : 0.0).epsilon(1e-9));
    s.discard_qubit(1, rec.outcome);
    CHECK(s.n_qubits() == 2);
    CHECK(s.norm() == doctest::Approx(1.0));
}

TEST_CASE("reduced density matrix agrees with a brute-force partial trace") {
    Rng prep(17);
    StateVector s = scrambled_state(3, prep);
    const std::vector<oracle::Amp> amps = oracle::aligned_amplitudes(s);
    const oracle::Mat rho = oracle::density_of(amps);

    SUBCASE("keep one qubit") {
        for (int keep = 0; keep < 3; ++keep) {
            const DensityMatrix got =
                reduced_density_matrix(s, {static_cast<QubitLabel>(keep)});
            const oracle::Mat want = oracle::partial_trace(rho, {keep}, 3);
            REQUIRE(got.dim() == 2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    CHECK(std::abs(got.at(r, c) - want.at(r, c)) < 1e-10);
        }
    }
    SUBCASE("keep two qubits, order matters") {
        const DensityMatrix got = reduced_density_matrix(s, {2, 0});
        REQUIRE(got.dim() == 4);
        // got bit 0 = label 2, bit 1 = label 0; oracle keep order mirrors that.
        const oracle::Mat want = oracle::partial_trace(rho, {2, 0}, 3);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(std::abs(got.at(r, c) - want.at(r, c)) < 1e-10);
    }
    SUBCASE("reduction is a physical state") {
        const DensityMatrix got = reduced_density_matrix(s, {0, 1});
        CHECK(std::abs(got.trace() - oracle::Amp(1.0, 0.0)) < 1e-10);
        for (std::size_t r = 0; r < got.dim(); ++r)
            for (std::size_t c = 0; c < got.dim(); ++c)
                CHECK(std::abs(got.at(r, c) - std::conj(got.at(c, r))) < 1e-10);
        for (double ev : hermitian_eigenvalues(got)) CHECK(ev > -1e-10);
    }
}

TEST_CASE("state vector error taxonomy") {
    StateVector s;
    s.add_qubit(0);
    CHECK_THROWS_AS(s.add_qubit(0), BadArgument);
    CHECK_THROWS_AS(s.position(3), UnknownQubit);
    CHECK_THROWS_AS(s.apply(make_gate(GateKind::H, {9})), UnknownQubit);

    s.apply(make_gate(GateKind::H, {0}));
    CHECK_THROWS_AS(s.discard_qubit(0, 0), BadArgument);  // both branches weighted

    CHECK_THROWS_AS(make_gate(GateKind::CNOT, {1}), BadGate);
    CHECK_THROWS_AS(make_gate(GateKind::RZ, {1}), BadGate);
    CHECK_THROWS_AS(make_gate(GateKind::H, {1}, {0.2}), BadGate);
    CHECK_THROWS_AS(make_gate(GateKind::CNOT, {1, 1}), BadGate);

    StateVector other;
    other.add_qubit(5);
    CHECK_THROWS_AS(fidelity_up_to_global_phase(s, other), LabelMismatch);
}

TEST_CASE("gate inverses") {
    const GateInstance rz = make_gate(GateKind::RZ, {0}, {0.7});
    CHECK(inverse_gate(rz).params[0] == doctest::Approx(-0.7));
    CHECK_THROWS_AS(inverse_gate(make_gate(GateKind::S, {0})), BadGate);
    CHECK_THROWS_AS(inverse_gate(make_gate(GateKind::T, {0})), BadGate);

    // Self-inverse and negated-angle kinds really invert as matrices.
    Rng rng(8);
    for (GateKind kind : {GateKind::H, GateKind::CNOT, GateKind::CCX, GateKind::RZZ,
                          GateKind::RX, GateKind::RY, GateKind::RZ}) {
        const GateInstance g = random_instance(kind, 3, rng);
        const oracle::Mat prod =
            oracle::mul(oracle::gate_unitary(inverse_gate(g), 3), oracle::gate_unitary(g, 3));
        CHECK(oracle::max_abs_diff_up_to_phase(oracle::Mat::identity(8), prod) < 1e-12);
    }
}

TEST_CASE("fidelity ignores global phase and label positions") {
    Rng prep(23);
    StateVector a = scrambled_state(3, prep);
    StateVector b = a;
    // Global phase via RZ+Z+S on a |1>-less path would be fiddly; scale directly.
    for (auto& amp : b.amplitudes()) amp *= std::complex<double>(0.0, 1.0);
    CHECK(fidelity_up_to_global_phase(a, b) == doctest::Approx(1.0));

    // Same state, different internal ordering: swap then relabel-by-swap.
    StateVector c = a;
    c.apply(make_gate(GateKind::SWAP, {0, 2}));
    StateVector d = a;  // logical swap of labels 0/2 equals SWAP gate
    CHECK(fidelity_up_to_global_phase(c, d) < 1.0);  // genuinely different states
    c.apply(make_gate(GateKind::SWAP, {0, 2}));
    CHECK(fidelity_up_to_global_phase(c, d) == doctest::Approx(1.0));
}
