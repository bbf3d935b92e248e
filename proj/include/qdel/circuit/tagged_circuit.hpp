#pragma once

#include <set>
#include <string>
#include <vector>

#include "qdel/sim/gate.hpp"

namespace qdel::circuit {

using sim::GateInstance;
using sim::GateKind;
using sim::QubitLabel;

// PublicOp gates may be shown to servers as-is. PrivateAngle protects a
// gate's parameter, PrivateStructure its very presence/placement.
enum class PrivacyTag { PublicOp, PrivateAngle, PrivateStructure };

const char* tag_name(PrivacyTag tag);
PrivacyTag tag_from_name(const std::string& name);

struct TaggedGate {
    GateInstance gate;
    PrivacyTag tag = PrivacyTag::PublicOp;
};

// Ordered gate list over qubits 0..n-1 with per-qubit dependency links.
// Edges always point from lower to higher gate index, so index order is a
// valid topological order.
class TaggedCircuit {
  public:
    explicit TaggedCircuit(int n_qubits);

    void add(GateInstance gate, PrivacyTag tag = PrivacyTag::PublicOp);

    int n_qubits() const { return n_qubits_; }
    const std::vector<TaggedGate>& gates() const { return gates_; }
    const TaggedGate& operator[](std::size_t i) const { return gates_[i]; }
    std::size_t size() const { return gates_.size(); }

    // Immediate predecessors of gate i: for each target qubit, the latest
    // earlier gate touching it.
    const std::vector<int>& predecessors(std::size_t i) const { return preds_[i]; }

    // Index of the last gate touching `q`, or -1.
    int last_use(QubitLabel q) const;

    std::string to_json() const;  // JSON array of {kind, params, targets, tag}
    static TaggedCircuit from_json(const std::string& text, int n_qubits = -1);

  private:
    int n_qubits_;
    std::vector<TaggedGate> gates_;
    std::vector<std::vector<int>> preds_;
    std::vector<int> last_touch_;  // per qubit, index of latest gate so far
};

// What the client hardware can do. M is the qubit capacity.
struct CapabilityProfile {
    int max_client_qubits = 0;  // M
    bool multiqubit_allowed = false;
    std::set<GateKind> allowed_single_qubit_gates;
    bool can_measure = false;
    bool can_swap_ports = false;

    // Whether the client itself may execute this gate.
    bool allows(const GateInstance& gate) const;

    static CapabilityProfile full(int m);       // all gates, measurement, ports
    static CapabilityProfile one_qubit(int m);  // single-qubit gates only

    std::string to_json() const;
    static CapabilityProfile from_json(const std::string& text);
};

// Gates whose predecessors are all completed (or earlier in the returned
// list), whose targets the client holds, and which the profile lets the
// client run. Returned in index order; one forward pass reaches the
// fixpoint because dependencies only point backwards.
std::vector<int> ready_frontier(const TaggedCircuit& circuit, const std::vector<bool>& completed,
                                const std::set<QubitLabel>& held,
                                const CapabilityProfile& profile);

}  // namespace qdel::circuit
