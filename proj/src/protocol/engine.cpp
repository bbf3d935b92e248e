#include "qdel/protocol/engine.hpp"

#include <algorithm>

#include <json.hpp>

#include "engine_core.hpp"
#include "qdel/errors.hpp"

namespace qdel::protocol {

using sim::GateKind;
using sim::GateInstance;
using sim::QubitLabel;

std::string RunSummary::to_json() const {
    nlohmann::json j;
    j["protocol"] = protocol;
    j["n_qubits"] = n_qubits;
    j["rounds"] = rounds;
    j["ticks"] = ticks;
    j["sends"] = sends;
    j["instructions"] = instructions;
    j["instr_original"] = instr_original;
    j["instr_verifier"] = instr_verifier;
    j["max_client_holdings"] = max_client_holdings;
    j["key_bits"] = key_bits;
    j["fallback_key_bits"] = fallback_key_bits;
    j["key_pool_uniform"] = key_pool_uniform;
    j["drops"] = drops;
    return j.dump(2);
}

namespace detail {

namespace {

bool kind_conjugable(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::S:
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CCZ:
        case GateKind::CCX:
            return true;
        default:
            return false;
    }
}

bool splittable_angle(const GateInstance& g) {
    if (g.params.size() != 1) return false;
    return g.kind == GateKind::RZ || g.kind == GateKind::RX || g.kind == GateKind::RY;
}

}  // namespace

EngineCore::EngineCore(const circuit::TaggedCircuit& input, const EngineConfig& config, Rng rng,
                       std::vector<int> drops, bool count_only)
    : cfg(config),
      circ(input.n_qubits()),
      keys(config.key_mode, rng.split(1)),
      rng_shuffle(rng.split(2)),
      rng_measure(rng.split(3)),
      rng_split(rng.split(4)),
      rng_adv(config.behavior.seed),
      drop_set(std::move(drops)),
      counting(count_only) {
    n_qubits = input.n_qubits();
    summary.protocol = static_cast<int>(cfg.protocol);
    summary.n_qubits = n_qubits;

    // Experiment labels for the input gates (original vs verifier half).
    std::vector<int> in_origin = cfg.gate_origin;
    if (in_origin.empty()) in_origin.assign(input.size(), 0);
    if (in_origin.size() != input.size())
        throw BadArgument("gate_origin size does not match circuit");

    // Two-body rotations never run as one piece under delegation: the public
    // skeleton separates from the single private angle.
    circuit::TaggedCircuit decomposed = circuit::decompose_rzz(input);
    std::vector<int> dec_origin;
    dec_origin.reserve(decomposed.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        int copies = input[i].gate.kind == GateKind::RZZ ? 3 : 1;
        for (int c = 0; c < copies; ++c) dec_origin.push_back(in_origin[i]);
    }

    if (cfg.trap_density > 0.0) {
        Rng trap_rng = rng.split(5);
        auto [trapped, tp] = circuit::insert_traps(decomposed, cfg.trap_density, trap_rng);
        circ = std::move(trapped);
        plan = std::move(tp);
        origin.resize(circ.size());
        for (std::size_t i = 0; i < circ.size(); ++i) {
            int o = plan.origin_of[i];
            origin[i] = o < 0 ? -1 : dec_origin[static_cast<std::size_t>(o)];
        }
    } else {
        circ = std::move(decomposed);
        origin = dec_origin;
        plan.origin_of.resize(circ.size());
        for (std::size_t i = 0; i < circ.size(); ++i)
            plan.origin_of[i] = static_cast<int>(i);
    }

    completed.assign(circ.size(), false);

    // Static feasibility: every gate must run somewhere.
    for (std::size_t i = 0; i < circ.size(); ++i) {
        const auto& tg = circ[i];
        const bool cap = client_capable(static_cast<int>(i));
        if (cfg.protocol == ProtocolKind::P4) {
            if (tg.tag == circuit::PrivacyTag::PrivateAngle && !splittable_angle(tg.gate))
                throw CircuitUnsupportedByProfile(
                    "private parameter on a gate whose angle cannot be split");
            continue;  // servers act on bare states; any kind applies
        }
        const bool delegatable_kind =
            kind_conjugable(tg.gate.kind) && tg.tag != circuit::PrivacyTag::PrivateAngle;
        if (!cap && !delegatable_kind)
            throw CircuitUnsupportedByProfile("gate " + sim::gate_name(tg.gate.kind) +
                                              " fits neither client nor server");
        if (!cap && (tg.gate.kind == GateKind::CCZ || tg.gate.kind == GateKind::CCX)) {
            // Server-side three-body gates leave two-qubit corrections the
            // client must be able to host and apply.
            if (!cfg.profile.multiqubit_allowed || M() < 2)
                throw CircuitUnsupportedByProfile(
                    "delegated " + sim::gate_name(tg.gate.kind) +
                    " needs a client able to apply two-qubit corrections");
        }
    }

    if (cfg.key_mode == crypto::KeyMode::PregeneratedPool) {
        int slots = std::max(1, M());
        int budget = 2 * n_qubits + 8 * static_cast<int>(circ.size()) + 64;
        keys.pregenerate(slots, budget);
    }
}

QubitLabel EngineCore::wire(QubitLabel q) const {
    auto it = wire_of.find(q);
    if (it == wire_of.end()) throw UnknownQubit("no wire for logical " + std::to_string(q));
    return it->second;
}

QubitLabel EngineCore::logical(QubitLabel w) const {
    auto it = logical_of.find(w);
    if (it == logical_of.end()) throw UnknownQubit("no logical qubit on wire " + std::to_string(w));
    return it->second;
}

int EngineCore::client_holdings() const {
    int n = 0;
    for (const auto& [q, h] : holder) n += h == Actor::Client;
    return n;
}

int EngineCore::free_slots() const { return std::max(0, M() - client_holdings()); }

std::set<QubitLabel> EngineCore::client_plain() const {
    std::set<QubitLabel> out;
    for (const auto& [q, h] : holder)
        if (h == Actor::Client && !frame.tracked(q) && !frame.pending_involves(q))
            out.insert(q);
    return out;
}

bool EngineCore::client_capable(int gate_idx) const {
    const auto& g = circ[static_cast<std::size_t>(gate_idx)].gate;
    return cfg.profile.allows(g) && static_cast<int>(g.targets.size()) <= M();
}

bool EngineCore::conjugable(GateKind kind) const { return kind_conjugable(kind); }

bool EngineCore::delegable(int gate_idx) const {
    const auto& tg = circ[static_cast<std::size_t>(gate_idx)];
    if (!kind_conjugable(tg.gate.kind)) return false;
    switch (tg.tag) {
        case circuit::PrivacyTag::PublicOp:
            return true;
        case circuit::PrivacyTag::PrivateAngle:
            return false;
        case circuit::PrivacyTag::PrivateStructure:
            // Only pushed to the server when the client physically cannot
            // run it; shuffles and traps then cover its position.
            return !client_capable(gate_idx);
    }
    return false;
}

int EngineCore::first_uncompleted() const {
    for (std::size_t i = 0; i < completed.size(); ++i)
        if (!completed[i]) return static_cast<int>(i);
    return -1;
}

bool EngineCore::all_completed() const { return first_uncompleted() < 0; }

GateInstance EngineCore::wire_gate(int gate_idx) const {
    GateInstance g = circ[static_cast<std::size_t>(gate_idx)].gate;
    for (auto& t : g.targets) t = wire(t);
    return g;
}

void EngineCore::create_qubit(QubitLabel q) {
    state.add_qubit(q);
    holder[q] = Actor::Client;
    wire_of[q] = q;
    logical_of[q] = q;
    note_holdings();
}

void EngineCore::note_holdings() {
    summary.max_client_holdings = std::max(summary.max_client_holdings, client_holdings());
}

void EngineCore::shuffle_wires(const std::vector<QubitLabel>& logicals, bool notify_client,
                               Actor mover) {
    if (logicals.empty()) return;
    std::vector<QubitLabel> wires;
    for (QubitLabel q : logicals) wires.push_back(wire(q));
    std::sort(wires.begin(), wires.end());
    circuit::Permutation perm = circuit::plan_swap_shuffle(wires, rng_shuffle);
    for (QubitLabel q : logicals) wire_of[q] = perm.at(wire_of[q]);
    logical_of.clear();
    for (const auto& [lq, w] : wire_of) logical_of[w] = lq;
    if (notify_client) {
        Message m;
        m.type = Message::Type::RelabelNotice;
        m.from = mover;
        m.to = Actor::Client;
        m.relabel = perm;
        transcript.append(std::move(m));
    }
}

void EngineCore::encrypt_and_send(std::vector<QubitLabel> logicals, Actor to, bool rekey) {
    if (logicals.empty()) return;
    for (QubitLabel q : logicals) {
        if (frame.tracked(q) && rekey && !frame.pending_involves(q))
            frame.decrypt(state, {q});
        if (!frame.tracked(q))
            frame.encrypt(state, q, keys.take_key(free_slots()));
    }
    shuffle_wires(logicals, false, Actor::Client);
    Message m;
    m.type = Message::Type::QubitTransfer;
    m.from = Actor::Client;
    m.to = to;
    for (QubitLabel q : logicals) m.wires.push_back(wire(q));
    std::sort(m.wires.begin(), m.wires.end());
    transcript.append(std::move(m));
    for (QubitLabel q : logicals) holder[q] = to;
    ++summary.sends;

    // A server now watches the sent qubits; the freed slots can produce pad
    // bits for later sends.
    if (cfg.key_mode == crypto::KeyMode::Protocol1Literal && keys.pool_size() < 4)
        keys.refill(free_slots(), 4 - keys.pool_size());

    if (cfg.behavior.kind == adversary::ServerBehavior::Kind::MeasureAndResend && !counting &&
        to != Actor::CommonNode) {
        for (QubitLabel q : logicals) {
            QubitLabel w = wire(q);
            bool is_probe = std::find(cfg.behavior.probe_wires.begin(),
                                      cfg.behavior.probe_wires.end(),
                                      w) != cfg.behavior.probe_wires.end();
            if (is_probe && !probed.count(q)) {
                auto rec = state.measure_z(q, rng_adv);
                adv_log.probes.push_back({w, rec.outcome});
                probed.insert(q);
            }
        }
    }
}

void EngineCore::receive(const std::vector<QubitLabel>& logicals, Actor from) {
    if (logicals.empty()) return;
    Message m;
    m.type = Message::Type::QubitTransfer;
    m.from = from;
    m.to = Actor::Client;
    for (QubitLabel q : logicals) m.wires.push_back(wire(q));
    std::sort(m.wires.begin(), m.wires.end());
    transcript.append(std::move(m));
    for (QubitLabel q : logicals) holder[q] = Actor::Client;
    ++summary.sends;
    note_holdings();
}

void EngineCore::instruct(int gate_idx, Actor server, const GateInstance& override_gate,
                          bool completes) {
    GateInstance logical_gate = override_gate;
    GateInstance wired = override_gate;
    for (auto& t : wired.targets) t = wire(t);

    Message m;
    m.type = Message::Type::Instruction;
    m.from = Actor::Client;
    m.to = server;
    m.gate = wired;
    const Message& appended = transcript.append(std::move(m));
    ++summary.instructions;
    const int og = origin[static_cast<std::size_t>(gate_idx)];
    if (og == 0) ++summary.instr_original;
    if (og == 1) ++summary.instr_verifier;

    bool eligible = false;
    if (cfg.behavior.kind == adversary::ServerBehavior::Kind::DropRandomGate) {
        switch (cfg.behavior.scope) {
            case adversary::DropScope::All: eligible = true; break;
            case adversary::DropScope::OriginalOnly: eligible = origin[static_cast<std::size_t>(gate_idx)] == 0; break;
            case adversary::DropScope::VerifierOnly: eligible = origin[static_cast<std::size_t>(gate_idx)] == 1; break;
        }
    }
    bool drop = false;
    if (eligible) {
        int my_index = eligible_seen_++;
        if (!counting)
            drop = std::binary_search(drop_set.begin(), drop_set.end(), my_index);
    }

    if (drop) {
        adv_log.dropped_seqs.push_back(appended.seq);
        ++summary.drops;
    } else {
        state.apply(logical_gate);
    }
    // The client's bookkeeping trusts the server either way. Bare qubits
    // (two-server flow before the final pad) need no key tracking.
    bool padded = false;
    for (QubitLabel t : logical_gate.targets) padded = padded || frame.tracked(t);
    if (padded) frame.conjugate(logical_gate);
    if (completes) {
        completed[static_cast<std::size_t>(gate_idx)] = true;
        if (plan.marker_after(gate_idx)) ping_marker(server);
    }
}

void EngineCore::instruct(int gate_idx, Actor server) {
    instruct(gate_idx, server, circ[static_cast<std::size_t>(gate_idx)].gate, true);
}

void EngineCore::client_apply(int gate_idx) {
    state.apply(circ[static_cast<std::size_t>(gate_idx)].gate);
    completed[static_cast<std::size_t>(gate_idx)] = true;
}

void EngineCore::do_frontier() {
    for (int i : circuit::ready_frontier(circ, completed, client_plain(), cfg.profile))
        client_apply(i);
}

void EngineCore::measure_ready() {
    if (!cfg.measure_outputs) return;
    std::vector<QubitLabel> live;
    for (const auto& [q, h] : holder) live.push_back(q);
    for (QubitLabel q : live) {
        int last = circ.last_use(q);
        if (last >= 0 && !completed[static_cast<std::size_t>(last)]) continue;
        if (frame.pending_involves(q)) continue;  // resolved later by co-holding
        measure_one(q);
    }
}

void EngineCore::measure_one(QubitLabel q) {
    if (holder.at(q) == Actor::Client) {
        if (frame.tracked(q)) frame.decrypt(state, {q});
        if (cfg.profile.can_measure) {
            auto rec = state.measure_z(q, rng_measure);
            measured[q] = rec.outcome;
            state.discard_qubit(q, rec.outcome);
            logical_of.erase(wire_of.at(q));
            wire_of.erase(q);
            holder.erase(q);
            return;
        }
        encrypt_and_send({q}, Actor::Server1, false);
    }

    const Actor server = holder.at(q);
    Message req;
    req.type = Message::Type::MeasureRequest;
    req.from = Actor::Client;
    req.to = server;
    req.wires = {wire(q)};
    transcript.append(std::move(req));

    auto rec = state.measure_z(q, rng_measure);
    Message res;
    res.type = Message::Type::MeasureResult;
    res.from = server;
    res.to = Actor::Client;
    res.wire = wire(q);
    res.bit = rec.outcome;
    transcript.append(std::move(res));

    measured[q] = frame.tracked(q) ? frame.decrypt_measurement_of(q, rec.outcome) : rec.outcome;
    frame.forget(q);
    state.discard_qubit(q, rec.outcome);
    logical_of.erase(wire_of.at(q));
    wire_of.erase(q);
    holder.erase(q);
}

bool EngineCore::server_step(Actor server) {
    bool any = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < circ.size(); ++i) {
            if (completed[i] || !delegable(static_cast<int>(i))) continue;
            bool ready = true;
            for (int p : circ.predecessors(i)) ready = ready && completed[static_cast<std::size_t>(p)];
            for (QubitLabel t : circ[i].gate.targets) {
                auto it = holder.find(t);
                ready = ready && it != holder.end() && it->second == server;
                ready = ready && !frame.pending_involves(t);
            }
            if (!ready) continue;
            instruct(static_cast<int>(i), server);
            progress = any = true;
        }
    }
    return any;
}

// Timing marker between the halves of a trap pair: bounce one qubit through
// the client so the server sees traffic it cannot reorder across.
void EngineCore::ping_marker(Actor server) {
    if (free_slots() < 1) return;  // no room; the trap pair still stands
    QubitLabel best_wire = 0;
    QubitLabel pick = 0;
    bool found = false;
    for (const auto& [q, h] : holder) {
        if (h != server) continue;
        QubitLabel w = wire_of.at(q);
        if (!found || w < best_wire) {
            best_wire = w;
            pick = q;
            found = true;
        }
    }
    if (!found) return;
    receive({pick}, server);
    encrypt_and_send({pick}, server, !frame.pending_involves(pick));
}

void EngineCore::resolve_pending_by_fetch(std::size_t pending_idx) {
    const GateInstance g = frame.pending().at(pending_idx);
    std::vector<QubitLabel> need = g.targets;
    std::vector<QubitLabel> missing;
    for (QubitLabel q : need)
        if (holder.at(q) != Actor::Client) missing.push_back(q);

    std::vector<QubitLabel> parked;
    for (const auto& [q, h] : holder) {
        if (h != Actor::Client) continue;
        if (std::find(need.begin(), need.end(), q) == need.end()) parked.push_back(q);
    }
    std::sort(parked.begin(), parked.end());
    while (client_holdings() + static_cast<int>(missing.size()) > M()) {
        if (parked.empty())
            throw SchedulerStuck("cannot free room to host a pending correction");
        encrypt_and_send({parked.front()}, Actor::Server1, true);
        parked.erase(parked.begin());
    }
    receive(missing, Actor::Server1);
    frame.resolve_pending(state, pending_idx);
}

void EngineCore::fetch_for_client(int gate_idx) {
    const auto& targets = circ[static_cast<std::size_t>(gate_idx)].gate.targets;
    std::vector<QubitLabel> missing;
    for (QubitLabel q : targets)
        if (holder.at(q) != Actor::Client) missing.push_back(q);

    std::vector<QubitLabel> parked;
    for (const auto& [q, h] : holder) {
        if (h != Actor::Client) continue;
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) parked.push_back(q);
    }
    std::sort(parked.begin(), parked.end());
    while (client_holdings() + static_cast<int>(missing.size()) > M()) {
        if (parked.empty()) throw SchedulerStuck("cannot free room for requested qubits");
        encrypt_and_send({parked.front()}, Actor::Server1, true);
        parked.erase(parked.begin());
    }
    receive(missing, Actor::Server1);
    std::vector<QubitLabel> locked;
    for (QubitLabel q : targets)
        if (frame.tracked(q)) locked.push_back(q);
    if (!locked.empty()) frame.decrypt(state, locked);
}

void EngineCore::push_targets_to_server(int gate_idx, Actor server) {
    const auto& targets = circ[static_cast<std::size_t>(gate_idx)].gate.targets;
    std::vector<QubitLabel> held;
    for (QubitLabel q : targets)
        if (holder.at(q) == Actor::Client) held.push_back(q);
    encrypt_and_send(held, server, true);
}

void EngineCore::exchange_loop(Actor server) {
    const int limit = 6 * static_cast<int>(circ.size()) + 6 * n_qubits + 64;
    int spins = 0;
    while (true) {
        do_frontier();
        measure_ready();
        server_step(server);
        do_frontier();
        measure_ready();
        const int g = first_uncompleted();
        if (g < 0) break;
        ++summary.ticks;
        if (++spins > limit)
            throw SchedulerStuck("no progress after " + std::to_string(spins) + " exchanges");

        const auto& targets = circ[static_cast<std::size_t>(g)].gate.targets;
        int blocking = -1;
        const auto& pend = frame.pending();
        for (std::size_t p = 0; p < pend.size() && blocking < 0; ++p)
            for (QubitLabel t : targets)
                if (std::find(pend[p].targets.begin(), pend[p].targets.end(), t) !=
                    pend[p].targets.end()) {
                    blocking = static_cast<int>(p);
                    break;
                }
        if (blocking >= 0) {
            resolve_pending_by_fetch(static_cast<std::size_t>(blocking));
            continue;
        }
        if (client_capable(g) && !delegable(g)) {
            fetch_for_client(g);
        } else if (delegable(g)) {
            push_targets_to_server(g, server);
        } else {
            throw CircuitUnsupportedByProfile("gate " +
                                              sim::gate_name(circ[static_cast<std::size_t>(g)].gate.kind) +
                                              " cannot be scheduled");
        }
    }
}

void EngineCore::execute_offload() {
    const int rounds = (n_qubits + M() - 1) / M();
    for (int r = 0; r < rounds; ++r) {
        const QubitLabel lo = static_cast<QubitLabel>(r * M());
        const QubitLabel hi = static_cast<QubitLabel>(std::min((r + 1) * M(), n_qubits));
        for (QubitLabel q = lo; q < hi; ++q) create_qubit(q);
        ++summary.rounds;
        do_frontier();
        measure_ready();
        if (r == rounds - 1) break;

        // The batch heading to the server; just before the final round the
        // client keeps the qubits it will itself combine with the last batch.
        std::vector<QubitLabel> retained;
        if (r == rounds - 2) {
            const QubitLabel last_lo = static_cast<QubitLabel>((rounds - 1) * M());
            const int room = M() - (n_qubits - static_cast<int>(last_lo));
            std::vector<QubitLabel> cand;
            for (const auto& [q, h] : holder)
                if (h == Actor::Client) cand.push_back(q);
            std::sort(cand.begin(), cand.end());
            for (QubitLabel q : cand) {
                if (static_cast<int>(retained.size()) >= room) break;
                bool wanted = false;
                for (std::size_t i = 0; i < circ.size() && !wanted; ++i) {
                    if (completed[i] || delegable(static_cast<int>(i)) ||
                        !client_capable(static_cast<int>(i)))
                        continue;
                    const auto& ts = circ[i].gate.targets;
                    bool has_q = std::find(ts.begin(), ts.end(), q) != ts.end();
                    bool has_last = false;
                    for (QubitLabel t : ts) has_last = has_last || t >= last_lo;
                    wanted = has_q && has_last;
                }
                if (wanted) retained.push_back(q);
            }
        }
        std::vector<QubitLabel> batch;
        for (const auto& [q, h] : holder)
            if (h == Actor::Client &&
                std::find(retained.begin(), retained.end(), q) == retained.end())
                batch.push_back(q);
        std::sort(batch.begin(), batch.end());
        encrypt_and_send(batch, Actor::Server1, false);
        server_step(Actor::Server1);
    }
    exchange_loop(Actor::Server1);
    finalize();
}

void EngineCore::finalize() {
    if (cfg.measure_outputs) {
        while (!frame.pending().empty()) resolve_pending_by_fetch(0);
        std::vector<QubitLabel> live;
        for (const auto& [q, h] : holder) live.push_back(q);
        std::sort(live.begin(), live.end());
        for (QubitLabel q : live) measure_one(q);
    } else {
        // Analysis view: pull the one-time pad off a copy of the joint state.
        sim::StateVector copy = state;
        crypto::CorrectionFrame fcopy = frame;
        std::vector<QubitLabel> live;
        for (const auto& [q, h] : holder) live.push_back(q);
        fcopy.decrypt(copy, live);
        state = std::move(copy);
    }
    summary.key_bits = keys.generated_bits();
    summary.fallback_key_bits = keys.fallback_bits();
}

RunResult EngineCore::take_result() {
    RunResult out;
    out.final_state = std::move(state);
    out.measured = std::move(measured);
    out.transcript = std::move(transcript);
    out.summary = summary;
    out.adversary_log = std::move(adv_log);
    return out;
}

}  // namespace detail

RunResult run_protocol(const circuit::TaggedCircuit& circuit, const EngineConfig& cfg, Rng rng) {
    if (cfg.protocol != ProtocolKind::P4) {
        if (cfg.profile.max_client_qubits < 1)
            throw CircuitUnsupportedByProfile("client must hold at least one qubit");
        if (cfg.protocol == ProtocolKind::P2 && !cfg.profile.multiqubit_allowed)
            throw CircuitUnsupportedByProfile(
                "memory-offload delegation assumes a multi-qubit client");
    }

    auto execute = [&](detail::EngineCore& core) {
        if (cfg.protocol == ProtocolKind::P4)
            core.execute_two_server();
        else
            core.execute_offload();
    };

    std::vector<int> drop_set;
    if (cfg.behavior.kind == adversary::ServerBehavior::Kind::DropRandomGate) {
        detail::EngineCore probe(circuit, cfg, rng, {}, true);
        execute(probe);
        Rng advr(cfg.behavior.seed);
        drop_set =
            adversary::pick_drop_indices(probe.eligible_instructions(), cfg.behavior.drop_count,
                                         advr);
    }
    detail::EngineCore core(circuit, cfg, rng, std::move(drop_set), false);
    execute(core);
    return core.take_result();
}

RunResult run_protocol2(const circuit::TaggedCircuit& circuit, int M, EngineConfig cfg, Rng rng) {
    cfg.protocol = ProtocolKind::P2;
    cfg.profile = circuit::CapabilityProfile::full(M);
    return run_protocol(circuit, cfg, rng);
}

RunResult run_protocol3(const circuit::TaggedCircuit& circuit, int M, EngineConfig cfg, Rng rng) {
    cfg.protocol = ProtocolKind::P3;
    cfg.profile = circuit::CapabilityProfile::one_qubit(M);
    return run_protocol(circuit, cfg, rng);
}

RunResult run_protocol4(const circuit::TaggedCircuit& circuit, EngineConfig cfg, Rng rng) {
    cfg.protocol = ProtocolKind::P4;
    cfg.profile = circuit::CapabilityProfile{};
    cfg.profile.max_client_qubits = 0;
    cfg.profile.multiqubit_allowed = false;
    cfg.profile.can_measure = false;
    cfg.profile.can_swap_ports = true;
    return run_protocol(circuit, cfg, rng);
}

}  // namespace qdel::protocol
