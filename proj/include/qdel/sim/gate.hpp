#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qdel::sim {

using QubitLabel = std::uint32_t;
using Amplitude = std::complex<double>;

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    T,
    RX,
    RY,
    RZ,
    CNOT,
    CZ,
    CCZ,
    CCX,
    SWAP,
    RZZ,
};

// Number of qubits the gate acts on.
int gate_arity(GateKind kind);

// Number of real rotation parameters (0 or 1 for this gate set).
int gate_param_count(GateKind kind);

const std::string& gate_name(GateKind kind);

// Inverse of gate_name; throws BadGate on unknown names.
GateKind gate_kind_from_name(const std::string& name);

// A gate applied to specific qubits. For CNOT/CCX the control(s) come first
// and the target is last; CZ/CCZ/SWAP/RZZ are symmetric.
struct GateInstance {
    GateKind kind;
    std::vector<double> params;
    std::vector<QubitLabel> targets;
};

GateInstance make_gate(GateKind kind, std::vector<QubitLabel> targets, std::vector<double> params = {});

// Arity/param/finite-angle validation; throws BadGate.
void validate_gate(const GateInstance& gate);

// Gate with all angles negated (every kind here is its own inverse otherwise).
GateInstance inverse_gate(const GateInstance& gate);

// Dense 2x2 matrix of a single-qubit kind, row-major.
std::array<Amplitude, 4> single_qubit_matrix(GateKind kind, double angle);

bool operator==(const GateInstance& a, const GateInstance& b);

}  // namespace qdel::sim
