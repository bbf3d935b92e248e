#include "qdel/circuit/scenarios.hpp"

#include "qdel/errors.hpp"

namespace qdel::circuit {

namespace {

using sim::make_gate;

void h_layer(TaggedCircuit& c) {
    for (QubitLabel q = 0; q < 3; ++q) c.add(make_gate(GateKind::H, {q}));
}

void x_layer(TaggedCircuit& c) {
    for (QubitLabel q = 0; q < 3; ++q) c.add(make_gate(GateKind::X, {q}));
}

}  // namespace

TaggedCircuit grover3() {
    TaggedCircuit c(3);
    h_layer(c);
    // Oracle: open control on q1 marks |101>, open control on q2 marks |110>.
    // The marked states are the secret, so the whole block is structural.
    c.add(make_gate(GateKind::X, {1}), PrivacyTag::PrivateStructure);
    c.add(make_gate(GateKind::CCZ, {0, 1, 2}), PrivacyTag::PrivateStructure);
    c.add(make_gate(GateKind::X, {1}), PrivacyTag::PrivateStructure);
    c.add(make_gate(GateKind::X, {2}), PrivacyTag::PrivateStructure);
    c.add(make_gate(GateKind::CCZ, {0, 1, 2}), PrivacyTag::PrivateStructure);
    c.add(make_gate(GateKind::X, {2}), PrivacyTag::PrivateStructure);
    // Diffusion, public.
    h_layer(c);
    x_layer(c);
    c.add(make_gate(GateKind::CCZ, {0, 1, 2}));
    x_layer(c);
    h_layer(c);
    return c;
}

TaggedCircuit qaoa3(const std::array<double, 6>& theta, const std::array<double, 3>& phi) {
    TaggedCircuit c(3);
    h_layer(c);
    for (QubitLabel q = 0; q < 3; ++q)
        c.add(make_gate(GateKind::RZ, {q}, {theta[q]}), PrivacyTag::PrivateAngle);
    c.add(make_gate(GateKind::RZZ, {0, 1}, {theta[3]}), PrivacyTag::PrivateAngle);
    c.add(make_gate(GateKind::RZZ, {0, 2}, {theta[4]}), PrivacyTag::PrivateAngle);
    c.add(make_gate(GateKind::RZZ, {1, 2}, {theta[5]}), PrivacyTag::PrivateAngle);
    for (QubitLabel q = 0; q < 3; ++q)
        c.add(make_gate(GateKind::RX, {q}, {phi[q]}), PrivacyTag::PrivateAngle);
    return c;
}

TaggedCircuit qnn3(const std::array<double, 3>& x, const std::array<double, 6>& omega) {
    TaggedCircuit c(3);
    auto priv = [&](GateKind k, QubitLabel q, double angle) {
        c.add(make_gate(k, {q}, {angle}), PrivacyTag::PrivateAngle);
    };
    priv(GateKind::RX, 0, x[0]);
    priv(GateKind::RX, 1, x[1]);
    priv(GateKind::RY, 0, omega[0]);
    priv(GateKind::RY, 1, omega[1]);
    c.add(make_gate(GateKind::CNOT, {0, 1}));
    priv(GateKind::RX, 2, x[2]);
    priv(GateKind::RY, 2, omega[2]);
    priv(GateKind::RY, 0, omega[3]);
    c.add(make_gate(GateKind::CNOT, {1, 2}));
    priv(GateKind::RY, 1, omega[4]);
    priv(GateKind::RY, 2, omega[5]);
    c.add(make_gate(GateKind::CNOT, {0, 1}));
    c.add(make_gate(GateKind::CNOT, {1, 2}));
    return c;
}

bool is_scenario_name(const std::string& name) {
    return name == "grover3" || name == "qaoa3" || name == "qnn3";
}

TaggedCircuit scenario_by_name(const std::string& name, const std::vector<double>& angles) {
    if (name == "grover3") {
        if (!angles.empty()) throw BadArgument("grover3 takes no angles");
        return grover3();
    }
    if (name == "qaoa3") {
        std::array<double, 6> theta{0.40, 0.70, 1.10, 0.90, 1.30, 0.50};
        std::array<double, 3> phi{0.60, 1.20, 0.80};
        if (!angles.empty()) {
            if (angles.size() != 9) throw BadArgument("qaoa3 takes 9 angles (6 theta + 3 phi)");
            for (int i = 0; i < 6; ++i) theta[i] = angles[i];
            for (int i = 0; i < 3; ++i) phi[i] = angles[6 + i];
        }
        return qaoa3(theta, phi);
    }
    if (name == "qnn3") {
        std::array<double, 3> x{0.30, 1.00, 1.70};
        std::array<double, 6> omega{0.50, 0.90, 1.30, 0.70, 1.10, 0.20};
        if (!angles.empty()) {
            if (angles.size() != 9) throw BadArgument("qnn3 takes 9 angles (3 x + 6 omega)");
            for (int i = 0; i < 3; ++i) x[i] = angles[i];
            for (int i = 0; i < 6; ++i) omega[i] = angles[3 + i];
        }
        return qnn3(x, omega);
    }
    throw BadArgument("unknown scenario: " + name);
}

}  // namespace qdel::circuit
