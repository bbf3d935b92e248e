#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "qdel/circuit/passes.hpp"
#include "qdel/circuit/scenarios.hpp"
#include "qdel/circuit/tagged_circuit.hpp"
#include "qdel/errors.hpp"
#include "qdel/random.hpp"
#include "support/dense_oracle.hpp"

using namespace qdel;
using namespace qdel::circuit;
using qdel::sim::GateKind;
using qdel::sim::make_gate;

TEST_CASE("tagged circuit dependency links") {
    TaggedCircuit c(3);
    c.add(make_gate(GateKind::H, {0}));                 // 0
    c.add(make_gate(GateKind::CNOT, {0, 1}));           // 1
    c.add(make_gate(GateKind::X, {2}));                 // 2
    c.add(make_gate(GateKind::CZ, {1, 2}));             // 3
    c.add(make_gate(GateKind::H, {0}));                 // 4

    CHECK(c.predecessors(0).empty());
    CHECK(c.predecessors(1) == std::vector<int>{0});
    CHECK(c.predecessors(2).empty());
    CHECK(c.predecessors(3) == std::vector<int>{1, 2});
    CHECK(c.predecessors(4) == std::vector<int>{1});
    CHECK(c.last_use(0) == 4);
    CHECK(c.last_use(2) == 3);

    CHECK_THROWS_AS(c.add(make_gate(GateKind::H, {3})), UnknownQubit);  // off register
}

TEST_CASE("ready frontier respects dependencies, holdings and the profile") {
    TaggedCircuit c(3);
    c.add(make_gate(GateKind::H, {0}));        // 0
    c.add(make_gate(GateKind::CNOT, {0, 1}));  // 1
    c.add(make_gate(GateKind::X, {2}));        // 2
    c.add(make_gate(GateKind::H, {2}));        // 3 runnable after 2

    std::vector<bool> done(c.size(), false);
    CapabilityProfile full2 = CapabilityProfile::full(2);

    // Client holds 2 only: the X and then the H on it chain within one pass.
    CHECK(ready_frontier(c, done, {2}, full2) == std::vector<int>{2, 3});
    // Holding 0 alone: gate 0 is ready; the CNOT needs qubit 1 too.
    CHECK(ready_frontier(c, done, {0}, full2) == std::vector<int>{0});
    // Holding 0 and 1: the chain H then CNOT is ready in order.
    CHECK(ready_frontier(c, done, {0, 1}, full2) == std::vector<int>{0, 1});
    // A single-qubit-only profile never offers the CNOT.
    CHECK(ready_frontier(c, done, {0, 1}, CapabilityProfile::one_qubit(2)) ==
          std::vector<int>{0});
    // Completed gates unblock successors.
    done[0] = true;
    done[2] = true;
    CHECK(ready_frontier(c, done, {0, 1, 2}, full2) == std::vector<int>{1, 3});
}

TEST_CASE("capability profiles") {
    CapabilityProfile one = CapabilityProfile::one_qubit(1);
    CHECK(one.allows(make_gate(GateKind::H, {0})));
    CHECK(one.allows(make_gate(GateKind::RZ, {0}, {0.4})));
    CHECK_FALSE(one.allows(make_gate(GateKind::CNOT, {0, 1})));
    CHECK(one.can_measure);  // measuring one qubit is a one-qubit operation

    CapabilityProfile full = CapabilityProfile::full(2);
    CHECK(full.allows(make_gate(GateKind::CNOT, {0, 1})));
    CHECK(full.can_measure);
    CHECK(full.can_swap_ports);

    CapabilityProfile round = CapabilityProfile::from_json(full.to_json());
    CHECK(round.max_client_qubits == full.max_client_qubits);
    CHECK(round.multiqubit_allowed == full.multiqubit_allowed);
    CHECK(round.allowed_single_qubit_gates == full.allowed_single_qubit_gates);
    CHECK(round.can_measure == full.can_measure);
    CHECK(round.can_swap_ports == full.can_swap_ports);
}

TEST_CASE("circuit JSON round trip") {
    Rng rng(5);
    TaggedCircuit c = oracle::random_tagged_circuit(4, 20, true, rng);
    TaggedCircuit back = TaggedCircuit::from_json(c.to_json(), c.n_qubits());
    REQUIRE(back.size() == c.size());
    CHECK(back.n_qubits() == c.n_qubits());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(back[i].gate == c[i].gate);
        CHECK(back[i].tag == c[i].tag);
    }
    // Width inference takes the highest target when not given.
    TaggedCircuit inferred = TaggedCircuit::from_json(c.to_json());
    CHECK(inferred.n_qubits() <= c.n_qubits());
    CHECK_THROWS_AS(TaggedCircuit::from_json("{\"not\": \"gates\"}"), BadArgument);
}

TEST_CASE("RZZ lowering keeps the unitary, hides only the angle") {
    for (double theta : {0.3, 1.7, std::numbers::pi}) {
        TaggedCircuit c(3);
        c.add(make_gate(GateKind::RZZ, {0, 2}, {theta}), PrivacyTag::PrivateAngle);
        TaggedCircuit low = decompose_rzz(c);
        REQUIRE(low.size() == 3);
        CHECK(low[0].gate.kind == GateKind::CNOT);
        CHECK(low[0].tag == PrivacyTag::PublicOp);
        CHECK(low[1].gate.kind == GateKind::RZ);
        CHECK(low[1].tag == PrivacyTag::PrivateAngle);
        CHECK(low[2].gate.kind == GateKind::CNOT);
        CHECK(oracle::max_abs_diff_up_to_phase(oracle::circuit_unitary(c),
                                               oracle::circuit_unitary(low)) < 1e-12);
    }
}

TEST_CASE("angle splitting") {
    Rng rng(9);
    SUBCASE("shares sum to the angle mod 2pi") {
        const double tau = 2.0 * std::numbers::pi;
        for (double theta : {1.0, 0.0, 5.9, 3.14}) {
            for (int n : {1, 2, 5}) {
                const std::vector<double> shares = split_angle(theta, n, rng);
                REQUIRE(static_cast<int>(shares.size()) == n);
                double sum = 0.0;
                for (double s : shares) {
                    CHECK(s >= 0.0);
                    CHECK(s < tau);
                    sum += s;
                }
                CHECK(std::abs(std::remainder(sum - theta, tau)) < 1e-12);
            }
        }
    }
    SUBCASE("composed rotations equal the unsplit rotation") {
        const std::vector<double> shares = split_angle(1.0, 2, rng);
        TaggedCircuit split(1);
        split.add(make_gate(GateKind::RZ, {0}, {shares[0]}));
        split.add(make_gate(GateKind::RZ, {0}, {shares[1]}));
        TaggedCircuit whole(1);
        whole.add(make_gate(GateKind::RZ, {0}, {1.0}));
        CHECK(oracle::max_abs_diff_up_to_phase(oracle::circuit_unitary(whole),
                                               oracle::circuit_unitary(split)) < 1e-12);
    }
    SUBCASE("zero shares is malformed") {
        CHECK_THROWS_AS(split_angle(1.0, 0, rng), BadArgument);
    }
}

TEST_CASE("trap insertion camouflages without changing the computation") {
    const TaggedCircuit grover = grover3();
    Rng rng(13);
    auto [trapped, plan] = insert_traps(grover, 0.5, rng);
    REQUIRE(trapped.size() > grover.size());
    CHECK(trapped.size() == grover.size() + 2 * plan.pairs.size());
    CHECK(!plan.pairs.empty());

    SUBCASE("every trap pair composes to the identity") {
        for (const TrapPair& p : plan.pairs) {
            CHECK(p.second_index == p.first_index + 1);
            CHECK(plan.is_trap(p.first_index));
            CHECK(plan.is_trap(p.second_index));
            const oracle::Mat prod = oracle::circuit_unitary(
                {trapped[static_cast<std::size_t>(p.first_index)].gate,
                 trapped[static_cast<std::size_t>(p.second_index)].gate},
                trapped.n_qubits());
            CHECK(oracle::max_abs_diff(oracle::Mat::identity(prod.dim), prod) < 1e-12);
        }
    }
    SUBCASE("the rewritten circuit computes the same unitary") {
        CHECK(oracle::max_abs_diff_up_to_phase(oracle::circuit_unitary(grover),
                                               oracle::circuit_unitary(trapped)) < 1e-10);
    }
    SUBCASE("origin map covers every original gate in order") {
        std::vector<int> originals;
        for (std::size_t i = 0; i < trapped.size(); ++i)
            if (!plan.is_trap(static_cast<int>(i)))
                originals.push_back(plan.origin_of[i]);
        REQUIRE(originals.size() == grover.size());
        for (std::size_t i = 0; i < originals.size(); ++i)
            CHECK(originals[i] == static_cast<int>(i));
    }
}

TEST_CASE("swap shuffle is uniform over two labels") {
    Rng rng(77);
    int swapped = 0;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const Permutation p = plan_swap_shuffle({4, 9}, rng);
        REQUIRE(p.size() == 2);
        if (p.at(4) == 9) ++swapped;
        const Permutation inv = invert_permutation(p);
        CHECK(inv.at(p.at(4)) == 4);
        CHECK(inv.at(p.at(9)) == 9);
    }
    const double freq = static_cast<double>(swapped) / draws;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("built-in scenarios") {
    CHECK(is_scenario_name("grover3"));
    CHECK(is_scenario_name("qaoa3"));
    CHECK(is_scenario_name("qnn3"));
    CHECK_FALSE(is_scenario_name("grover4"));

    const TaggedCircuit g = grover3();
    CHECK(g.n_qubits() == 3);

    // One Grover iteration for two marked states of three qubits succeeds
    // with certainty: |101> and |110> carry all the weight.
    sim::StateVector s;
    for (int q = 0; q < 3; ++q) s.add_qubit(static_cast<QubitLabel>(q));
    for (std::size_t i = 0; i < g.size(); ++i) s.apply(g[i].gate);
    // Index bit j is qubit j, so the outcome string q0q1q2 = "110" is index
    // 0b011 while the palindrome "101" is 0b101.
    const auto amps = oracle::aligned_amplitudes(s);
    CHECK(std::norm(amps[0b101]) + std::norm(amps[0b011]) == doctest::Approx(1.0));

    // Scenario angles are overridable and validated.
    const TaggedCircuit q1 = scenario_by_name("qaoa3", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
    const TaggedCircuit q2 = scenario_by_name("qaoa3");
    CHECK(q1.size() == q2.size());
    CHECK_THROWS_AS(scenario_by_name("qaoa3", {0.1}), BadArgument);
    CHECK_THROWS_AS(scenario_by_name("nope"), BadArgument);
}
