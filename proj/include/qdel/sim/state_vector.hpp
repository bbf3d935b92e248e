#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "qdel/random.hpp"
#include "qdel/sim/gate.hpp"

namespace qdel::sim {

// Kernel selection. Auto switches to the OpenMP kernels once the amplitude
// array is large enough to amortize the fork/join overhead.
enum class ExecPolicy { Auto, Serial, Parallel };

struct MeasurementRecord {
    QubitLabel label;
    int outcome;         // 0 or 1
    double probability;  // Born probability of the recorded outcome
};

// Dense statevector over labeled qubits, little-endian: the qubit stored at
// position p contributes bit p of the basis index. Labels are opaque ids
// chosen by callers; positions are an internal detail that shifts when
// qubits are discarded.
class StateVector {
  public:
    StateVector() : amps_(1, Amplitude(1.0, 0.0)) {}

    // Appends a fresh qubit in |0> at the highest position.
    void add_qubit(QubitLabel label);

    // Removes a qubit known to be in the computational basis state `value`
    // (e.g. right after measurement). Throws BadArgument if the discarded
    // branch carries noticeable weight.
    void discard_qubit(QubitLabel label, int value);

    void apply(const GateInstance& gate);

    MeasurementRecord measure_z(QubitLabel label, Rng& rng);

    double prob_one(QubitLabel label) const;
    double norm() const;

    int n_qubits() const { return static_cast<int>(labels_.size()); }
    std::size_t dim() const { return amps_.size(); }
    bool has(QubitLabel label) const { return pos_.count(label) != 0; }
    int position(QubitLabel label) const;  // throws UnknownQubit

    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }
    const std::vector<QubitLabel>& labels() const { return labels_; }

    void set_policy(ExecPolicy p) { policy_ = p; }
    ExecPolicy policy() const { return policy_; }

  private:
    bool use_parallel() const;

    std::vector<Amplitude> amps_;
    std::vector<QubitLabel> labels_;  // labels_[p] = label at bit position p
    std::unordered_map<QubitLabel, int> pos_;
    ExecPolicy policy_ = ExecPolicy::Auto;
};

// |<a|b>|^2 after aligning b's qubit order to a's. Throws LabelMismatch if
// the label sets differ.
double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b);

}  // namespace qdel::sim
