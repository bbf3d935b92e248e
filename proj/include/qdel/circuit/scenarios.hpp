#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdel/circuit/tagged_circuit.hpp"

namespace qdel::circuit {

// Three-qubit Grover search marking |101> and |110>; one iteration drives
// the combined probability of the marked states to 1.
TaggedCircuit grover3();

// One QAOA layer on 3 qubits: H layer, RZ(theta1..3), RZZ(theta4..6) on the
// three pairs, RX(phi1..3). All angles are private.
TaggedCircuit qaoa3(const std::array<double, 6>& theta, const std::array<double, 3>& phi);

// Three-qubit network: RX data encoding (x), RY weights (omega), CNOT
// entanglers. Data and weights are private.
TaggedCircuit qnn3(const std::array<double, 3>& x, const std::array<double, 6>& omega);

bool is_scenario_name(const std::string& name);

// grover3 | qaoa3 | qnn3 with fixed default angles; angles (when the
// scenario has any) can be overridden with exactly as many values.
TaggedCircuit scenario_by_name(const std::string& name,
                               const std::vector<double>& angles = {});

}  // namespace qdel::circuit
