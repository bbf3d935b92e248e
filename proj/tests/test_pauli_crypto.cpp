#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdel/crypto/keygen.hpp"
#include "qdel/crypto/pad.hpp"
#include "qdel/errors.hpp"
#include "qdel/random.hpp"
#include "qdel/sim/gate.hpp"
#include "qdel/sim/state_vector.hpp"
#include "support/dense_oracle.hpp"

using namespace qdel;
using namespace qdel::sim;
using namespace qdel::crypto;

namespace {

// Operator of the pad X^a Z^b (Z applied first) over n qubits.
oracle::Mat pad_unitary(const std::vector<PadKey>& keys, int n) {
    oracle::Mat u = oracle::Mat::identity(std::size_t{1} << n);
    for (int q = 0; q < n; ++q) {
        if (keys[static_cast<std::size_t>(q)].b)
            u = oracle::mul(
                oracle::gate_unitary(make_gate(GateKind::Z, {static_cast<QubitLabel>(q)}), n), u);
        if (keys[static_cast<std::size_t>(q)].a)
            u = oracle::mul(
                oracle::gate_unitary(make_gate(GateKind::X, {static_cast<QubitLabel>(q)}), n), u);
    }
    return u;
}

// The conjugation contract as a dense identity: a frame that rewrites keys
// K -> K' with pending list P after the server ran g must satisfy
//   P * Pad(K')^-1 * g * Pad(K) == g   up to global phase,
// because decryption undoes the pad first and then replays the pendings
// front-first.
double conjugation_defect(const GateInstance& g, int n, int key_mask) {
    std::vector<PadKey> before(static_cast<std::size_t>(n));
    CorrectionFrame frame;
    for (int q = 0; q < n; ++q) {
        before[static_cast<std::size_t>(q)] =
            PadKey{(key_mask >> (2 * q)) & 1, (key_mask >> (2 * q + 1)) & 1};
        frame.adopt(static_cast<QubitLabel>(q), before[static_cast<std::size_t>(q)]);
    }
    frame.conjugate(g);

    std::vector<PadKey> after(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        if (frame.tracked(static_cast<QubitLabel>(q)))
            after[static_cast<std::size_t>(q)] = frame.key_of(static_cast<QubitLabel>(q));

    const oracle::Mat ug = oracle::gate_unitary(g, n);
    oracle::Mat lhs = oracle::mul(ug, pad_unitary(before, n));
    lhs = oracle::mul(oracle::dagger(pad_unitary(after, n)), lhs);
    for (const GateInstance& p : frame.pending()) lhs = oracle::mul(oracle::gate_unitary(p, n), lhs);
    return oracle::max_abs_diff_up_to_phase(ug, lhs);
}

}  // namespace

TEST_CASE("key-averaged encryption is the maximally mixed state") {
    // Pauli axis states plus random ones: without the key, a padded qubit
    // carries no information at all.
    std::vector<std::vector<GateInstance>> preps;
    preps.push_back({});                                      // |0>
    preps.push_back({make_gate(GateKind::X, {0})});           // |1>
    preps.push_back({make_gate(GateKind::H, {0})});           // |+>
    preps.push_back({make_gate(GateKind::X, {0}), make_gate(GateKind::H, {0})});  // |->
    preps.push_back({make_gate(GateKind::H, {0}), make_gate(GateKind::S, {0})});  // |+i>
    preps.push_back({make_gate(GateKind::X, {0}), make_gate(GateKind::H, {0}),
                     make_gate(GateKind::S, {0})});           // |-i>
    Rng rng(31);
    for (int r = 0; r < 20; ++r)
        preps.push_back({make_gate(GateKind::RY, {0}, {rng.uniform(0.0, 6.28)}),
                         make_gate(GateKind::RZ, {0}, {rng.uniform(0.0, 6.28)})});
    REQUIRE(preps.size() == 26);

    for (const auto& prep : preps) {
        oracle::Mat avg(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                StateVector s;
                s.add_qubit(0);
                for (const auto& g : prep) s.apply(g);
                CorrectionFrame frame;
                frame.encrypt(s, 0, PadKey{a, b});
                const oracle::Mat rho = oracle::density_of(oracle::aligned_amplitudes(s));
                for (std::size_t i = 0; i < 4; ++i) avg.a[i] += 0.25 * rho.a[i];
            }
        CHECK(std::abs(avg.at(0, 0) - oracle::Amp(0.5, 0.0)) < 1e-10);
        CHECK(std::abs(avg.at(1, 1) - oracle::Amp(0.5, 0.0)) < 1e-10);
        CHECK(std::abs(avg.at(0, 1)) < 1e-10);
        CHECK(std::abs(avg.at(1, 0)) < 1e-10);
    }
}

TEST_CASE("conjugation rules hold as dense identities for every supported gate") {
    struct Case {
        GateInstance gate;
        int n;
    };
    const Case cases[] = {
        {make_gate(GateKind::X, {0}), 1},        {make_gate(GateKind::Z, {0}), 1},
        {make_gate(GateKind::H, {0}), 1},        {make_gate(GateKind::S, {0}), 1},
        {make_gate(GateKind::CNOT, {0, 1}), 2},  {make_gate(GateKind::CNOT, {1, 0}), 2},
        {make_gate(GateKind::CZ, {0, 1}), 2},    {make_gate(GateKind::SWAP, {0, 1}), 2},
        {make_gate(GateKind::CCZ, {0, 1, 2}), 3}, {make_gate(GateKind::CCX, {0, 1, 2}), 3},
        {make_gate(GateKind::CCX, {2, 0, 1}), 3},
    };
    for (const Case& c : cases) {
        const int n_keys = 1 << (2 * c.n);
        CAPTURE(gate_name(c.gate.kind));
        for (int mask = 0; mask < n_keys; ++mask) {
            CAPTURE(mask);
            CHECK(conjugation_defect(c.gate, c.n, mask) < 1e-12);
        }
    }
}

TEST_CASE("CNOT key update: X on the control copies onto the target") {
    CorrectionFrame frame;
    frame.adopt(0, PadKey{1, 0});
    frame.adopt(1, PadKey{0, 0});
    frame.conjugate(make_gate(GateKind::CNOT, {0, 1}));
    CHECK(frame.key_of(0).a == 1);
    CHECK(frame.key_of(0).b == 0);
    CHECK(frame.key_of(1).a == 1);
    CHECK(frame.key_of(1).b == 0);
    CHECK(frame.pending().empty());

    // The rule is nothing but CNOT (X x I) = (X x X) CNOT.
    const int n = 2;
    const oracle::Mat cnot = oracle::gate_unitary(make_gate(GateKind::CNOT, {0, 1}), n);
    const oracle::Mat x0 = oracle::gate_unitary(make_gate(GateKind::X, {0}), n);
    const oracle::Mat x1 = oracle::gate_unitary(make_gate(GateKind::X, {1}), n);
    CHECK(oracle::max_abs_diff(oracle::mul(cnot, x0), oracle::mul(x0, oracle::mul(x1, cnot))) <
          1e-12);
}

TEST_CASE("CCZ on an X-padded control leaves a pending CZ on the other pair") {
    CorrectionFrame frame;
    frame.adopt(0, PadKey{1, 0});
    frame.adopt(1, PadKey{0, 0});
    frame.adopt(2, PadKey{0, 0});
    frame.conjugate(make_gate(GateKind::CCZ, {0, 1, 2}));
    REQUIRE(frame.pending().size() == 1);
    CHECK(frame.pending()[0].kind == GateKind::CZ);
    CHECK(frame.pending()[0].targets == std::vector<QubitLabel>{1, 2});
    CHECK(frame.pending_involves(1));
    CHECK_FALSE(frame.pending_involves(0));
    // Full dense-identity coverage for all 64 keys lives in the sweep above.
}

TEST_CASE("encrypt, delegate CZ, decrypt recovers the plaintext for all 16 keys") {
    for (int mask = 0; mask < 16; ++mask) {
        Rng prep(55);
        StateVector plain;
        plain.add_qubit(0);
        plain.add_qubit(1);
        plain.apply(make_gate(GateKind::RY, {0}, {1.1}));
        plain.apply(make_gate(GateKind::RY, {1}, {2.3}));
        plain.apply(make_gate(GateKind::CNOT, {0, 1}));

        StateVector enc = plain;
        CorrectionFrame frame;
        frame.encrypt(enc, 0, PadKey{mask & 1, (mask >> 1) & 1});
        frame.encrypt(enc, 1, PadKey{(mask >> 2) & 1, (mask >> 3) & 1});

        const GateInstance cz = make_gate(GateKind::CZ, {0, 1});
        plain.apply(cz);
        enc.apply(cz);
        frame.conjugate(cz);
        frame.decrypt(enc, {0, 1});
        CHECK(fidelity_up_to_global_phase(plain, enc) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("measurement decryption and its guards") {
    CHECK(decrypt_measurement(1, PadKey{1, 1}) == 0);
    CHECK(decrypt_measurement(1, PadKey{0, 1}) == 1);

    // Encrypted Born statistics: the server measures padded qubits, the
    // client xors with its X bits; frequencies must match the plaintext.
    Rng rng(71);
    int ones = 0;
    const int shots = 10000;
    for (int t = 0; t < shots; ++t) {
        StateVector s;
        s.add_qubit(0);
        s.apply(make_gate(GateKind::RY, {0}, {1.2}));  // P(1) = sin^2(0.6)
        CorrectionFrame frame;
        const PadKey key{rng.coin() ? 1 : 0, rng.coin() ? 1 : 0};
        frame.encrypt(s, 0, key);
        const int raw = s.measure_z(0, rng).outcome;
        ones += frame.decrypt_measurement_of(0, raw);
    }
    const double want = std::sin(0.6) * std::sin(0.6);
    const double sigma = std::sqrt(want * (1.0 - want) / shots);
    CHECK(std::abs(static_cast<double>(ones) / shots - want) < 3.0 * sigma);

    // A qubit with a pending correction cannot be decrypted by xor alone.
    CorrectionFrame frame;
    frame.adopt(0, PadKey{1, 0});
    frame.adopt(1, PadKey{0, 0});
    frame.adopt(2, PadKey{0, 0});
    frame.conjugate(make_gate(GateKind::CCZ, {0, 1, 2}));
    CHECK_THROWS_AS(frame.decrypt_measurement_of(1, 0), CorrectionNotLocal);

    StateVector s3;
    for (QubitLabel q : {0, 1, 2}) s3.add_qubit(q);
    CHECK_THROWS_AS(frame.decrypt(s3, {1}), CorrectionNotLocal);  // pending straddles {1,2}
}

TEST_CASE("conjugation rejects angle-bearing kinds") {
    CorrectionFrame frame;
    frame.adopt(0, PadKey{1, 1});
    CHECK_THROWS_AS(frame.conjugate(make_gate(GateKind::T, {0})), UnsupportedConjugation);
    CHECK_THROWS_AS(frame.conjugate(make_gate(GateKind::RZ, {0}, {0.3})),
                    UnsupportedConjugation);
}

TEST_CASE("measuring plus states yields unbiased reusable key bits") {
    sim::StateVector ws;
    Rng rng(101);
    KeygenResult r = protocol1_keygen(2, 10000, ws, rng);
    REQUIRE(static_cast<int>(r.bits.size()) == 10000);
    CHECK(r.rounds == 5000);  // two slots per round
    int ones = 0;
    for (int b : r.bits) ones += b;
    const double freq = static_cast<double>(ones) / 10000.0;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
    CHECK(ws.n_qubits() == 0);  // workspace fully recycled

    CHECK_THROWS_AS(protocol1_keygen(0, 4, ws, rng), NoCapacity);
    CHECK_THROWS_AS(protocol1_keygen(2, -1, ws, rng), BadArgument);
}

TEST_CASE("key sources account for quantum and fallback bits") {
    SUBCASE("literal mode refills from free slots, falls back without them") {
        KeySource src(KeyMode::Protocol1Literal, Rng(7));
        (void)src.take_key(2);
        CHECK(src.fallback_bits() == 0);
        CHECK(src.generated_bits() >= 2);
        (void)src.take_bits(4, 0);  // no slot free: classical stand-in
        CHECK(src.fallback_bits() >= 1);
    }
    SUBCASE("pool mode spends what it pregenerated") {
        KeySource src(KeyMode::PregeneratedPool, Rng(7));
        src.pregenerate(2, 6);
        CHECK(src.pool_size() == 6);
        (void)src.take_bits(6, 0);
        CHECK(src.pool_size() == 0);
        CHECK(src.fallback_bits() == 0);
    }
    SUBCASE("external mode is all classical") {
        KeySource src(KeyMode::ExternalClassical, Rng(7));
        (void)src.take_bits(8, 4);
        CHECK(src.fallback_bits() == 8);
        CHECK(src.generated_bits() == 0);
    }
}
