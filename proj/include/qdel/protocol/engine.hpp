#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdel/adversary/behavior.hpp"
#include "qdel/circuit/tagged_circuit.hpp"
#include "qdel/crypto/keygen.hpp"
#include "qdel/protocol/message.hpp"
#include "qdel/random.hpp"
#include "qdel/sim/state_vector.hpp"

namespace qdel::protocol {

// 2: client with M-qubit memory offloads storage to one server.
// 3: client that can hold M qubits but only act on one at a time.
// 4: purely classical client steering two servers plus a common node.
enum class ProtocolKind { P2 = 2, P3 = 3, P4 = 4 };

struct EngineConfig {
    ProtocolKind protocol = ProtocolKind::P2;
    circuit::CapabilityProfile profile;
    double trap_density = 0.0;
    // When false the run stops before any output measurement and the
    // decrypted final state is returned for analysis.
    bool measure_outputs = true;
    crypto::KeyMode key_mode = crypto::KeyMode::Protocol1Literal;
    adversary::ServerBehavior behavior;
    // Per-gate experiment labels for the input circuit: 0 = original,
    // 1 = verifier. Empty means all original. Trap gates added by the
    // engine are neither.
    std::vector<int> gate_origin;
};

struct RunSummary {
    int protocol = 2;
    int n_qubits = 0;
    int rounds = 0;            // generation rounds (hops for protocol 4)
    int ticks = 0;             // exchange-loop iterations
    int sends = 0;             // qubit transfers in either direction
    int instructions = 0;
    // Instructed-gate counts by experiment origin; the drop adversary can
    // only hit instructed gates, so detection odds follow these, not the
    // raw circuit sizes.
    int instr_original = 0;
    int instr_verifier = 0;
    int max_client_holdings = 0;
    int key_bits = 0;          // pad bits produced by measuring |+> states
    int fallback_key_bits = 0; // pad bits that had to come from classical randomness
    bool key_pool_uniform = true;  // pre-encryption check (protocol 4)
    int drops = 0;             // instructions silently skipped by the server
    std::string to_json() const;
};

struct RunResult {
    sim::StateVector final_state;           // populated when !measure_outputs
    std::map<sim::QubitLabel, int> measured;  // logical label -> decrypted bit
    Transcript transcript;
    RunSummary summary;
    adversary::AdversaryLog adversary_log;
};

// Generic entry point; cfg.protocol selects the flow.
RunResult run_protocol(const circuit::TaggedCircuit& circuit, const EngineConfig& cfg, Rng rng);

// Convenience wrappers that pick the canonical capability profile.
RunResult run_protocol2(const circuit::TaggedCircuit& circuit, int M, EngineConfig cfg, Rng rng);
RunResult run_protocol3(const circuit::TaggedCircuit& circuit, int M, EngineConfig cfg, Rng rng);
RunResult run_protocol4(const circuit::TaggedCircuit& circuit, EngineConfig cfg, Rng rng);

}  // namespace qdel::protocol
