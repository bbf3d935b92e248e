#include "qdel/sim/gate.hpp"

#include <cmath>
#include <unordered_map>

#include "qdel/errors.hpp"

namespace qdel::sim {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T:
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::RZZ:
            return 2;
        case GateKind::CCZ:
        case GateKind::CCX:
            return 3;
    }
    return 0;
}

int gate_param_count(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::RZZ:
            return 1;
        default:
            return 0;
    }
}

const std::string& gate_name(GateKind kind) {
    static const std::string names[] = {"H",  "X",  "Y",   "Z",   "S",    "T",   "RX", "RY",
                                        "RZ", "CNOT", "CZ", "CCZ", "CCX", "SWAP", "RZZ"};
    return names[static_cast<int>(kind)];
}

GateKind gate_kind_from_name(const std::string& name) {
    static const std::unordered_map<std::string, GateKind> table = {
        {"H", GateKind::H},       {"X", GateKind::X},     {"Y", GateKind::Y},
        {"Z", GateKind::Z},       {"S", GateKind::S},     {"T", GateKind::T},
        {"RX", GateKind::RX},     {"RY", GateKind::RY},   {"RZ", GateKind::RZ},
        {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ},   {"CCZ", GateKind::CCZ},
        {"CCX", GateKind::CCX},   {"SWAP", GateKind::SWAP}, {"RZZ", GateKind::RZZ},
    };
    auto it = table.find(name);
    if (it == table.end()) throw BadGate("unknown gate kind: " + name);
    return it->second;
}

GateInstance make_gate(GateKind kind, std::vector<QubitLabel> targets, std::vector<double> params) {
    GateInstance g{kind, std::move(params), std::move(targets)};
    validate_gate(g);
    return g;
}

void validate_gate(const GateInstance& gate) {
    if (static_cast<int>(gate.targets.size()) != gate_arity(gate.kind))
        throw BadGate("arity mismatch for " + gate_name(gate.kind) + ": got " +
                      std::to_string(gate.targets.size()) + " targets");
    if (static_cast<int>(gate.params.size()) != gate_param_count(gate.kind))
        throw BadGate("parameter count mismatch for " + gate_name(gate.kind));
    for (double p : gate.params)
        if (!std::isfinite(p)) throw BadGate("non-finite angle in " + gate_name(gate.kind));
    for (std::size_t i = 0; i < gate.targets.size(); ++i)
        for (std::size_t j = i + 1; j < gate.targets.size(); ++j)
            if (gate.targets[i] == gate.targets[j])
                throw BadGate("repeated target in " + gate_name(gate.kind));
}

GateInstance inverse_gate(const GateInstance& gate) {
    GateInstance inv = gate;
    for (double& p : inv.params) p = -p;
    if (gate.kind == GateKind::S || gate.kind == GateKind::T) {
        // S^-1 = Z S, T^-1 = S Z T; callers that need exact inverses of these
        // compose them instead. The rewriting passes only invert the
        // self-inverse and rotation kinds, so reject here.
        throw BadGate("no single-gate inverse for " + gate_name(gate.kind));
    }
    return inv;
}

std::array<Amplitude, 4> single_qubit_matrix(GateKind kind, double angle) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Amplitude i(0.0, 1.0);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
        case GateKind::H:
            return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i, i, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S:
            return {1.0, 0.0, 0.0, i};
        case GateKind::T:
            return {1.0, 0.0, 0.0, std::exp(i * (M_PI / 4.0))};
        case GateKind::RX:
            return {c, -i * s, -i * s, c};
        case GateKind::RY:
            return {c, -s, s, c};
        case GateKind::RZ:
            return {std::exp(-i * (angle / 2.0)), 0.0, 0.0, std::exp(i * (angle / 2.0))};
        default:
            throw BadGate("not a single-qubit kind: " + gate_name(kind));
    }
}

bool operator==(const GateInstance& a, const GateInstance& b) {
    return a.kind == b.kind && a.params == b.params && a.targets == b.targets;
}

}  // namespace qdel::sim
