// Two-server flow for a client with no quantum memory at all: qubits are
// born on one server, private angles run as two consecutive shares on
// different servers, a common node re-labels wires between hops, and the
// final measurement is split between an encrypting and a measuring server
// with keys produced by a separate service.

#include <algorithm>

#include "engine_core.hpp"
#include "qdel/circuit/passes.hpp"
#include "qdel/errors.hpp"
#include "qdel/stats.hpp"

namespace qdel::protocol::detail {

using sim::GateInstance;
using sim::GateKind;

namespace {
Actor other(Actor a) { return a == Actor::Server1 ? Actor::Server2 : Actor::Server1; }

// Synthetic wire ids for key bits announced by the key service.
constexpr QubitLabel kKeySlotBase = 900000;
}  // namespace

void EngineCore::instruct_raw(const GateInstance& logical_gate, Actor server) {
    GateInstance wired = logical_gate;
    for (auto& t : wired.targets) t = wire(t);
    Message m;
    m.type = Message::Type::Instruction;
    m.from = Actor::Client;
    m.to = server;
    m.gate = wired;
    transcript.append(std::move(m));
    ++summary.instructions;
    state.apply(logical_gate);
    bool padded = false;
    for (QubitLabel t : logical_gate.targets) padded = padded || frame.tracked(t);
    if (padded) frame.conjugate(logical_gate);
}

void EngineCore::transfer(std::vector<QubitLabel> logicals, Actor from, Actor to) {
    if (logicals.empty()) return;
    Message m;
    m.type = Message::Type::QubitTransfer;
    m.from = from;
    m.to = to;
    for (QubitLabel q : logicals) m.wires.push_back(wire(q));
    std::sort(m.wires.begin(), m.wires.end());
    transcript.append(std::move(m));
    for (QubitLabel q : logicals) holder[q] = to;
    ++summary.sends;
}

void EngineCore::hop_between_servers(Actor from_server, Actor to_server) {
    std::vector<QubitLabel> moving;
    for (const auto& [q, h] : holder)
        if (h == from_server) moving.push_back(q);
    std::sort(moving.begin(), moving.end());
    transfer(moving, from_server, Actor::CommonNode);
    // The node swaps ports and tells only the client what went where.
    shuffle_wires(moving, true, Actor::CommonNode);
    transfer(moving, Actor::CommonNode, to_server);
    ++summary.rounds;
}

void EngineCore::p4_final_measure(Actor enc_server, Actor meas_server) {
    if (!cfg.measure_outputs) {
        finalize();
        return;
    }

    std::vector<QubitLabel> live;
    for (const auto& [q, h] : holder) live.push_back(q);
    std::sort(live.begin(), live.end());

    // The service measures |+> states for key bits; the client checks the
    // sample looks unbiased before letting anything be encrypted with it.
    constexpr int kServiceSlots = 8;
    constexpr int kCalibration = 256;
    auto calib = keys.take_bits(kCalibration, kServiceSlots);
    int ones = 0;
    for (int b : calib) ones += b;
    summary.key_pool_uniform = stats::binomial_within_3sigma(ones, kCalibration, 0.5);

    auto key_bits = keys.take_bits(2 * static_cast<int>(live.size()), kServiceSlots);
    for (std::size_t i = 0; i < key_bits.size(); ++i) {
        Message m;
        m.type = Message::Type::MeasureResult;
        m.from = Actor::KeyService;
        m.to = Actor::Client;
        m.wire = kKeySlotBase + static_cast<QubitLabel>(i);
        m.bit = key_bits[i];
        transcript.append(std::move(m));
    }

    // Pads go on as ordinary instructions to the encrypting server.
    for (std::size_t i = 0; i < live.size(); ++i) {
        crypto::PadKey key{key_bits[2 * i], key_bits[2 * i + 1]};
        if (key.b) instruct_raw(sim::make_gate(GateKind::Z, {live[i]}), enc_server);
        if (key.a) instruct_raw(sim::make_gate(GateKind::X, {live[i]}), enc_server);
        frame.adopt(live[i], key);
    }

    transfer(live, enc_server, meas_server);
    finalize();  // measures every live qubit via the holding server
}

void EngineCore::execute_two_server() {
    for (QubitLabel q = 0; q < static_cast<QubitLabel>(n_qubits); ++q) {
        state.add_qubit(q);
        holder[q] = Actor::Server1;
        wire_of[q] = q;
        logical_of[q] = q;
    }

    Actor current = Actor::Server1;
    struct Inflight {
        int gate_idx;
        double second_share;
    };
    std::vector<Inflight> inflight;
    const int limit = 4 * static_cast<int>(circ.size()) + 16;
    int spins = 0;

    while (true) {
        // Second halves of angle shares land first on the new server.
        for (const auto& f : inflight) {
            GateInstance g = circ[static_cast<std::size_t>(f.gate_idx)].gate;
            g.params = {f.second_share};
            instruct(f.gate_idx, current, g, true);
        }
        inflight.clear();

        // Everything public runs where the qubits already are.
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = 0; i < circ.size(); ++i) {
                if (completed[i]) continue;
                if (circ[i].tag == circuit::PrivacyTag::PrivateAngle) continue;
                bool ready = true;
                for (int p : circ.predecessors(i))
                    ready = ready && completed[static_cast<std::size_t>(p)];
                if (!ready) continue;
                instruct(static_cast<int>(i), current);
                progress = true;
            }
        }

        // Ready private angles start their first share here; the rest of the
        // angle only ever exists on the other server.
        for (std::size_t i = 0; i < circ.size(); ++i) {
            if (completed[i]) continue;
            if (circ[i].tag != circuit::PrivacyTag::PrivateAngle) continue;
            bool ready = true;
            for (int p : circ.predecessors(i))
                ready = ready && completed[static_cast<std::size_t>(p)];
            if (!ready) continue;
            auto shares = circuit::split_angle(circ[i].gate.params[0], 2, rng_split);
            GateInstance g = circ[i].gate;
            g.params = {shares[0]};
            instruct(static_cast<int>(i), current, g, false);
            inflight.push_back({static_cast<int>(i), shares[1]});
        }

        if (inflight.empty() && all_completed()) break;
        if (inflight.empty())
            throw SchedulerStuck("two-server flow blocked with work remaining");
        if (++spins > limit) throw SchedulerStuck("two-server flow did not converge");

        hop_between_servers(current, other(current));
        current = other(current);
    }

    p4_final_measure(current, other(current));
}

}  // namespace qdel::protocol::detail
