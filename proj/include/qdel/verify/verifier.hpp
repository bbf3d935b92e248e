#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdel/adversary/behavior.hpp"
#include "qdel/circuit/tagged_circuit.hpp"
#include "qdel/protocol/engine.hpp"
#include "qdel/random.hpp"

namespace qdel::verify {

using sim::QubitLabel;

// K locally simulated decoy subcircuits on fresh qubits. Once wires are
// shuffled the server cannot tell decoy traffic from the real workload, so
// tampering lands on a decoy with probability proportional to its share.
struct VerifierSpec {
    int k = 0;
    int p_v = 0;      // qubits per subcircuit
    int n_prime = 0;  // k * p_v
    std::vector<circuit::TaggedCircuit> subcircuits;
    std::vector<std::vector<int>> expected;  // deterministic Z outcome bits

    int total_gates() const;
};

// Subcircuits whose gate-kind mix follows the original's (largest-remainder
// apportionment over the kinds that fit p_v qubits), built as a mirror pair
// U then U^-1 so the Z outcome is exactly |0...0>. S and T invert to the
// phase-equivalent RZ(-pi/2) / RZ(-pi/4). gates_per_subcircuit 0 keeps the
// original's gates-per-qubit density; odd budgets round down to a pair count.
VerifierSpec build_verifier(const circuit::TaggedCircuit& original, int n_prime, int k, Rng& rng,
                            int gates_per_subcircuit = 0);

// X-only chains for detection-rate calibration: a dropped X flips a measured
// bit no matter which pad keys are in force, so every single drop is caught
// with certainty. Other kinds lack that property (a dropped CNOT is masked
// whenever the X pad bit on its control makes the encrypted control 0).
VerifierSpec build_certified_verifier(int n_prime, int k, Rng& rng, int gates_per_subcircuit);

// Re-simulates each subcircuit with each gate removed in turn; true when
// every removal leaves zero amplitude on the expected outcome. Plain-state
// check: it certifies pad-independent detection only for X-only circuits.
bool certify_single_drop_detection(const VerifierSpec& spec);

// Normalized gate-kind frequencies of a circuit.
std::map<sim::GateKind, double> kind_histogram(const circuit::TaggedCircuit& c);

// Original plus all subcircuits on labels shifted past the original's,
// uniformly interleaved while preserving each side's internal order. Second
// member labels each gate 0 = original, 1 = verifier.
std::pair<circuit::TaggedCircuit, std::vector<int>> interleave(
    const circuit::TaggedCircuit& original, const VerifierSpec& spec, Rng& rng);

struct InterleaveConfig {
    protocol::ProtocolKind protocol = protocol::ProtocolKind::P2;
    circuit::CapabilityProfile profile;
    adversary::ServerBehavior behavior;
    int shots = 1;
    double trap_density = 0.0;
};

enum class Verdict { Honest, Dishonest };
const char* verdict_name(Verdict v);

struct DetectionReport {
    int shots = 0;
    int mismatched_shots = 0;  // shots with any decoy bit off
    Verdict verdict = Verdict::Honest;
    long instructed_original = 0;  // drop pool sizes, from the first shot
    long instructed_verifier = 0;
    // Chance that `shots` single-drop rounds all miss the decoys, by the
    // instructed-gate counts. The log10 form survives values below 1e-308.
    double analytic_nondetect = 0.0;
    double analytic_nondetect_log10 = 0.0;
    std::vector<std::vector<int>> original_bits;  // per shot, labels 0..N-1
    std::string to_json() const;
};

// One protocol execution per shot over the interleaved circuit (the gate
// order is drawn once; mixing across shots comes from pads and shuffles).
// Decoy outcomes are compared bit-for-bit against the local simulation;
// verdict is Dishonest on the first mismatch anywhere.
DetectionReport run_interleaved(const circuit::TaggedCircuit& original, const VerifierSpec& spec,
                                const InterleaveConfig& cfg, Rng& rng);

// (1 / (1 + nprime/n))^shots evaluated in log space; exact 1 at shots 0.
double nondetection_probability(int n, int nprime, int shots);
double nondetection_log10(int n, int nprime, int shots);

// Same likelihood with gate counts in place of qubit counts, for a per-shot
// uniform choice of `drops` distinct instructed gates.
double nondetection_probability_gates(long orig_gates, long verifier_gates, int shots,
                                      int drops = 1);
double nondetection_log10_gates(long orig_gates, long verifier_gates, int shots, int drops = 1);

// "4.04e-42"-style decimal for a probability supplied as log10; representable
// far below double underflow. Not-a-number maps to "0".
std::string format_probability_log10(double log10_value);

}  // namespace qdel::verify
