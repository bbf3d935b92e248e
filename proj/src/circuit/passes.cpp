#include "qdel/circuit/passes.hpp"

#include <algorithm>
#include <cmath>

#include "qdel/errors.hpp"

namespace qdel::circuit {

namespace {
constexpr double kTau = 6.283185307179586476925287;
}

TaggedCircuit decompose_rzz(const TaggedCircuit& circuit) {
    TaggedCircuit out(circuit.n_qubits());
    for (const auto& tg : circuit.gates()) {
        if (tg.gate.kind != GateKind::RZZ) {
            out.add(tg.gate, tg.tag);
            continue;
        }
        const QubitLabel x = tg.gate.targets[0];
        const QubitLabel y = tg.gate.targets[1];
        out.add(sim::make_gate(GateKind::CNOT, {x, y}), PrivacyTag::PublicOp);
        out.add(sim::make_gate(GateKind::RZ, {y}, {tg.gate.params[0]}),
                PrivacyTag::PrivateAngle);
        out.add(sim::make_gate(GateKind::CNOT, {x, y}), PrivacyTag::PublicOp);
    }
    return out;
}

std::vector<double> split_angle(double theta, int n, Rng& rng) {
    if (n < 1) throw BadArgument("split_angle needs n >= 1");
    std::vector<double> shares(n);
    double rest = theta;
    for (int i = 0; i + 1 < n; ++i) {
        shares[i] = rng.uniform(0.0, kTau);
        rest -= shares[i];
    }
    rest = std::fmod(rest, kTau);
    if (rest < 0) rest += kTau;
    shares[n - 1] = rest;
    return shares;
}

bool TrapPlan::marker_after(int rewritten_index) const {
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const TrapPair& p) { return p.first_index == rewritten_index; });
}

std::pair<TaggedCircuit, TrapPlan> insert_traps(const TaggedCircuit& circuit, double density,
                                                Rng& rng) {
    if (density < 0.0 || density > 1.0) throw BadArgument("trap density must be in [0,1]");

    // Traps only make sense where they blend in: right after gates the
    // server will run anyway.
    auto eligible = [](const TaggedGate& tg) {
        return tg.gate.targets.size() > 1 || tg.tag == PrivacyTag::PrivateStructure;
    };

    TaggedCircuit out(circuit.n_qubits());
    TrapPlan plan;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const auto& tg = circuit[i];
        plan.origin_of.push_back(static_cast<int>(i));
        out.add(tg.gate, tg.tag);
        if (density > 0.0 && eligible(tg) && rng.uniform() < density) {
            QubitLabel a = static_cast<QubitLabel>(rng.below(circuit.n_qubits()));
            QubitLabel b = static_cast<QubitLabel>(rng.below(circuit.n_qubits() - 1));
            if (b >= a) ++b;
            const GateKind kind = rng.coin() ? GateKind::CNOT : GateKind::CZ;
            const int at = static_cast<int>(out.size());
            out.add(sim::make_gate(kind, {a, b}), PrivacyTag::PublicOp);
            out.add(sim::make_gate(kind, {a, b}), PrivacyTag::PublicOp);
            plan.origin_of.push_back(-1);
            plan.origin_of.push_back(-1);
            plan.pairs.push_back({at, at + 1});
        }
    }
    return {std::move(out), std::move(plan)};
}

Permutation plan_swap_shuffle(const std::vector<QubitLabel>& held, Rng& rng) {
    if (held.empty()) throw BadArgument("cannot shuffle an empty label set");
    std::vector<QubitLabel> from(held);
    std::sort(from.begin(), from.end());
    std::vector<QubitLabel> to(from);
    for (std::size_t i = to.size() - 1; i > 0; --i)
        std::swap(to[i], to[rng.below(i + 1)]);
    Permutation p;
    for (std::size_t i = 0; i < from.size(); ++i) p[from[i]] = to[i];
    return p;
}

Permutation invert_permutation(const Permutation& p) {
    Permutation inv;
    for (const auto& [k, v] : p) inv[v] = k;
    return inv;
}

}  // namespace qdel::circuit
