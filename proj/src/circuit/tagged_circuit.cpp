#include "qdel/circuit/tagged_circuit.hpp"

#include <algorithm>

#include <json.hpp>

#include "qdel/errors.hpp"

namespace qdel::circuit {

using nlohmann::json;

const char* tag_name(PrivacyTag tag) {
    switch (tag) {
        case PrivacyTag::PublicOp: return "public";
        case PrivacyTag::PrivateAngle: return "private-angle";
        case PrivacyTag::PrivateStructure: return "private-structure";
    }
    return "?";
}

PrivacyTag tag_from_name(const std::string& name) {
    if (name == "public") return PrivacyTag::PublicOp;
    if (name == "private-angle") return PrivacyTag::PrivateAngle;
    if (name == "private-structure") return PrivacyTag::PrivateStructure;
    throw BadArgument("unknown privacy tag: " + name);
}

TaggedCircuit::TaggedCircuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw BadArgument("circuit needs at least one qubit");
    last_touch_.assign(n_qubits, -1);
}

void TaggedCircuit::add(GateInstance gate, PrivacyTag tag) {
    sim::validate_gate(gate);
    for (QubitLabel t : gate.targets)
        if (t >= static_cast<QubitLabel>(n_qubits_))
            throw UnknownQubit("gate target " + std::to_string(t) + " outside circuit");
    std::vector<int> preds;
    for (QubitLabel t : gate.targets) {
        if (last_touch_[t] >= 0) preds.push_back(last_touch_[t]);
        last_touch_[t] = static_cast<int>(gates_.size());
    }
    std::sort(preds.begin(), preds.end());
    preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
    preds_.push_back(std::move(preds));
    gates_.push_back({std::move(gate), tag});
}

int TaggedCircuit::last_use(QubitLabel q) const {
    if (q >= static_cast<QubitLabel>(n_qubits_))
        throw UnknownQubit("qubit " + std::to_string(q) + " outside circuit");
    return last_touch_[q];
}

std::string TaggedCircuit::to_json() const {
    json arr = json::array();
    for (const auto& tg : gates_) {
        arr.push_back({{"kind", sim::gate_name(tg.gate.kind)},
                       {"params", tg.gate.params},
                       {"targets", tg.gate.targets},
                       {"tag", tag_name(tg.tag)}});
    }
    return arr.dump(2);
}

TaggedCircuit TaggedCircuit::from_json(const std::string& text, int n_qubits) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw BadArgument("circuit JSON must be an array of gates");
    int n = n_qubits;
    if (n < 0) {
        QubitLabel top = 0;
        for (const auto& g : arr)
            for (QubitLabel t : g.at("targets").get<std::vector<QubitLabel>>())
                top = std::max(top, t);
        n = static_cast<int>(top) + 1;
    }
    TaggedCircuit c(n);
    for (const auto& g : arr) {
        GateInstance gi;
        gi.kind = sim::gate_kind_from_name(g.at("kind").get<std::string>());
        if (g.contains("params")) gi.params = g["params"].get<std::vector<double>>();
        gi.targets = g.at("targets").get<std::vector<QubitLabel>>();
        PrivacyTag tag =
            g.contains("tag") ? tag_from_name(g["tag"].get<std::string>()) : PrivacyTag::PublicOp;
        c.add(std::move(gi), tag);
    }
    return c;
}

bool CapabilityProfile::allows(const GateInstance& gate) const {
    if (gate.targets.size() > 1) return multiqubit_allowed;
    return allowed_single_qubit_gates.count(gate.kind) != 0;
}

CapabilityProfile CapabilityProfile::full(int m) {
    CapabilityProfile p;
    p.max_client_qubits = m;
    p.multiqubit_allowed = true;
    for (int k = 0; k <= static_cast<int>(GateKind::RZZ); ++k) {
        auto kind = static_cast<GateKind>(k);
        if (sim::gate_arity(kind) == 1) p.allowed_single_qubit_gates.insert(kind);
    }
    p.can_measure = true;
    p.can_swap_ports = true;
    return p;
}

CapabilityProfile CapabilityProfile::one_qubit(int m) {
    CapabilityProfile p = full(m);
    p.multiqubit_allowed = false;
    return p;
}

std::string CapabilityProfile::to_json() const {
    json names = json::array();
    for (GateKind k : allowed_single_qubit_gates) names.push_back(sim::gate_name(k));
    json j = {{"max_client_qubits", max_client_qubits},
              {"multiqubit_allowed", multiqubit_allowed},
              {"allowed_single_qubit_gates", names},
              {"can_measure", can_measure},
              {"can_swap_ports", can_swap_ports}};
    return j.dump(2);
}

CapabilityProfile CapabilityProfile::from_json(const std::string& text) {
    json j = json::parse(text);
    CapabilityProfile p;
    p.max_client_qubits = j.at("max_client_qubits").get<int>();
    p.multiqubit_allowed = j.value("multiqubit_allowed", false);
    if (j.contains("allowed_single_qubit_gates")) {
        for (const auto& name : j["allowed_single_qubit_gates"])
            p.allowed_single_qubit_gates.insert(sim::gate_kind_from_name(name.get<std::string>()));
    } else {
        p.allowed_single_qubit_gates = full(0).allowed_single_qubit_gates;
    }
    p.can_measure = j.value("can_measure", true);
    p.can_swap_ports = j.value("can_swap_ports", true);
    return p;
}

std::vector<int> ready_frontier(const TaggedCircuit& circuit, const std::vector<bool>& completed,
                                const std::set<QubitLabel>& held,
                                const CapabilityProfile& profile) {
    std::vector<int> out;
    std::vector<bool> done = completed;
    done.resize(circuit.size(), false);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (done[i]) continue;
        const auto& tg = circuit[i];
        bool ok = profile.allows(tg.gate);
        for (QubitLabel t : tg.gate.targets) ok = ok && held.count(t);
        for (int p : circuit.predecessors(i)) ok = ok && done[p];
        if (ok) {
            out.push_back(static_cast<int>(i));
            done[i] = true;
        }
    }
    return out;
}

}  // namespace qdel::circuit
