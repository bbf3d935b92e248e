#include "qdel/crypto/pad.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "qdel/errors.hpp"

namespace qdel::crypto {

using sim::GateKind;
using sim::make_gate;

PadKey CorrectionFrame::key_of(QubitLabel q) const {
    auto it = pauli_.find(q);
    if (it == pauli_.end())
        throw UnknownQubit("qubit " + std::to_string(q) + " carries no key");
    return it->second;
}

bool CorrectionFrame::pending_involves(QubitLabel q) const {
    for (const auto& g : pending_)
        if (std::find(g.targets.begin(), g.targets.end(), q) != g.targets.end()) return true;
    return false;
}

void CorrectionFrame::encrypt(sim::StateVector& state, QubitLabel q, PadKey key) {
    if (tracked(q))
        throw ProtocolViolation("qubit " + std::to_string(q) + " is already encrypted");
    if (key.b) state.apply(make_gate(GateKind::Z, {q}));
    if (key.a) state.apply(make_gate(GateKind::X, {q}));
    pauli_[q] = PadKey{key.a & 1, key.b & 1};
}

// Clifford conjugation of the pad only; callers deal with pendings.
void CorrectionFrame::pauli_conjugate_rule(const GateInstance& gate) {
    auto key = [&](QubitLabel q) -> PadKey& { return pauli_[q]; };
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::Z:
            break;  // commutes with the pad up to phase
        case GateKind::H: {
            PadKey& k = key(gate.targets[0]);
            std::swap(k.a, k.b);
            break;
        }
        case GateKind::S: {
            PadKey& k = key(gate.targets[0]);
            k.b ^= k.a;
            break;
        }
        case GateKind::CNOT: {
            PadKey& c = key(gate.targets[0]);
            PadKey& t = key(gate.targets[1]);
            t.a ^= c.a;
            c.b ^= t.b;
            break;
        }
        case GateKind::CZ: {
            PadKey& x = key(gate.targets[0]);
            PadKey& y = key(gate.targets[1]);
            const int ax = x.a, ay = y.a;
            x.b ^= ay;
            y.b ^= ax;
            break;
        }
        case GateKind::SWAP: {
            std::swap(key(gate.targets[0]), key(gate.targets[1]));
            break;
        }
        default:
            throw UnsupportedConjugation(std::string("no pad rule for ") +
                                         sim::gate_name(gate.kind));
    }
}

void CorrectionFrame::conjugate(const GateInstance& gate) {
    for (QubitLabel q : gate.targets) {
        if (!tracked(q)) pauli_[q] = PadKey{0, 0};
        if (pending_involves(q))
            throw UnsupportedConjugation("qubit " + std::to_string(q) +
                                         " has an unresolved pending correction");
    }

    // Diagonal phase f(x) = x_i x_j x_k of a CCZ, pulled through the X part
    // of the pad, leaves the diagonal g(x) = f(x) + f(x xor s) where s marks
    // the X-flipped qubits: its linear terms are Z flips, its quadratic
    // terms pending CZs, its constant a global phase.
    auto ccz_rule = [&](QubitLabel i, QubitLabel j, QubitLabel k,
                        std::vector<GateInstance>& fresh) {
        const std::array<QubitLabel, 3> qs{i, j, k};
        std::array<int, 3> in_s;
        for (int t = 0; t < 3; ++t) in_s[t] = pauli_[qs[t]].a;
        const int s_size = in_s[0] + in_s[1] + in_s[2];
        if (s_size == 0) return;
        if (s_size == 1) {
            // s = {p}: g = x_q x_r for the other two.
            std::vector<QubitLabel> other;
            for (int t = 0; t < 3; ++t)
                if (!in_s[t]) other.push_back(qs[t]);
            fresh.push_back(make_gate(GateKind::CZ, {other[0], other[1]}));
        } else if (s_size == 2) {
            // s = {p,q}: g = x_p x_r + x_q x_r + x_r, r outside s.
            QubitLabel r = 0;
            std::vector<QubitLabel> in;
            for (int t = 0; t < 3; ++t) {
                if (in_s[t])
                    in.push_back(qs[t]);
                else
                    r = qs[t];
            }
            fresh.push_back(make_gate(GateKind::CZ, {in[0], r}));
            fresh.push_back(make_gate(GateKind::CZ, {in[1], r}));
            pauli_[r].b ^= 1;
        } else {
            // s = all three: every pair, every single, plus a global phase.
            fresh.push_back(make_gate(GateKind::CZ, {i, j}));
            fresh.push_back(make_gate(GateKind::CZ, {i, k}));
            fresh.push_back(make_gate(GateKind::CZ, {j, k}));
            for (QubitLabel q : qs) pauli_[q].b ^= 1;
        }
    };

    std::vector<GateInstance> fresh;
    switch (gate.kind) {
        case GateKind::CCZ:
            ccz_rule(gate.targets[0], gate.targets[1], gate.targets[2], fresh);
            break;
        case GateKind::CCX: {
            // CCX = H_t CCZ H_t: run the CCZ rule in the H-rotated frame,
            // then rotate back, turning CZ(x,t) pendings into CNOT(x,t).
            const QubitLabel t = gate.targets[2];
            std::swap(pauli_[t].a, pauli_[t].b);
            ccz_rule(gate.targets[0], gate.targets[1], t, fresh);
            std::swap(pauli_[t].a, pauli_[t].b);
            for (auto& g : fresh) {
                if (g.targets[0] == t) std::swap(g.targets[0], g.targets[1]);
                if (g.targets[1] == t) g.kind = GateKind::CNOT;
            }
            break;
        }
        default:
            pauli_conjugate_rule(gate);
            break;
    }
    pending_.insert(pending_.begin(), fresh.begin(), fresh.end());
    normalize();
}

// Identity pads carry no information; dropping them keeps tracked() meaning
// "actually padded", which schedulers rely on.
void CorrectionFrame::normalize() {
    for (auto it = pauli_.begin(); it != pauli_.end();) {
        if (it->second.a == 0 && it->second.b == 0)
            it = pauli_.erase(it);
        else
            ++it;
    }
}

void CorrectionFrame::decrypt(sim::StateVector& state, const std::vector<QubitLabel>& labels) {
    auto inside = [&](QubitLabel q) {
        return std::find(labels.begin(), labels.end(), q) != labels.end();
    };

    // Straddling pendings make local decryption unsound.
    for (const auto& g : pending_) {
        const bool any = std::any_of(g.targets.begin(), g.targets.end(), inside);
        const bool all = std::all_of(g.targets.begin(), g.targets.end(), inside);
        if (any && !all)
            throw CorrectionNotLocal("pending " + std::string(sim::gate_name(g.kind)) +
                                     " spans qubits outside the decrypted set");
    }

    for (QubitLabel q : labels) {
        auto it = pauli_.find(q);
        if (it == pauli_.end()) continue;  // no pad on this one
        const PadKey k = it->second;
        if (k.a) state.apply(make_gate(GateKind::X, {q}));
        if (k.b) state.apply(make_gate(GateKind::Z, {q}));
        pauli_.erase(it);
    }
    for (std::size_t i = 0; i < pending_.size();) {
        if (std::all_of(pending_[i].targets.begin(), pending_[i].targets.end(), inside)) {
            state.apply(pending_[i]);
            pending_.erase(pending_.begin() + i);
        } else {
            ++i;
        }
    }
}

void CorrectionFrame::resolve_pending(sim::StateVector& state, std::size_t index) {
    if (index >= pending_.size()) throw BadArgument("pending index out of range");
    const GateInstance g = pending_[index];
    pending_.erase(pending_.begin() + index);
    state.apply(g);
    pauli_conjugate_rule(g);
    normalize();
}

int CorrectionFrame::decrypt_measurement_of(QubitLabel q, int outcome) const {
    if (pending_involves(q))
        throw CorrectionNotLocal("qubit " + std::to_string(q) +
                                 " still has a pending correction");
    return decrypt_measurement(outcome, key_of(q));
}

void CorrectionFrame::forget(QubitLabel q) { pauli_.erase(q); }

void CorrectionFrame::adopt(QubitLabel q, PadKey key) {
    if (tracked(q))
        throw ProtocolViolation("qubit " + std::to_string(q) + " is already encrypted");
    if (key.a || key.b) pauli_[q] = PadKey{key.a & 1, key.b & 1};
}

std::string CorrectionFrame::to_json() const {
    nlohmann::json j;
    j["keys"] = nlohmann::json::object();
    for (const auto& [q, k] : pauli_)
        j["keys"][std::to_string(q)] = {{"a", k.a}, {"b", k.b}};
    j["pending"] = nlohmann::json::array();
    for (const auto& g : pending_)
        j["pending"].push_back({{"kind", sim::gate_name(g.kind)}, {"targets", g.targets}});
    return j.dump();
}

}  // namespace qdel::crypto
