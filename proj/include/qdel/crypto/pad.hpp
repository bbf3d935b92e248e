#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdel/sim/gate.hpp"
#include "qdel/sim/state_vector.hpp"

namespace qdel::crypto {

using sim::GateInstance;
using sim::QubitLabel;

struct PadKey {
    int a = 0;  // X exponent
    int b = 0;  // Z exponent
};

// Pure measurement decryption: Z-basis outcome of X^aZ^b|psi> is the
// plaintext outcome xored with a.
inline int decrypt_measurement(int outcome, PadKey key) { return outcome ^ key.a; }

// Classical ledger of the encryption layer. With Pad = product over tracked
// qubits of X^a Z^b and C = the pending list (front applied first), the
// tracked state always factors as  encrypted = Pad * C * plaintext  up to
// global phase. Pendings arise only from server-side CCZ/CCX; they are
// CZ/CNOT instances whose qubit sets may overlap each other but always
// commute, so resolution order is free.
class CorrectionFrame {
  public:
    bool tracked(QubitLabel q) const { return pauli_.count(q) != 0; }
    PadKey key_of(QubitLabel q) const;  // throws UnknownQubit
    const std::map<QubitLabel, PadKey>& keys() const { return pauli_; }
    const std::vector<GateInstance>& pending() const { return pending_; }
    bool pending_involves(QubitLabel q) const;

    // Physically applies X^aZ^b (Z first) and records the key.
    void encrypt(sim::StateVector& state, QubitLabel q, PadKey key);

    // Key update for a gate the server applied to encrypted qubits.
    // Supported: X, Z, H, S, CNOT, CZ, SWAP, CCZ, CCX. Throws
    // UnsupportedConjugation for other kinds or when a target already has a
    // pending correction (the scheduler never lets that happen).
    void conjugate(const GateInstance& gate);

    // Undoes the pad on `labels` (Z^b X^a), then applies, front first, every
    // pending correction lying entirely inside `labels`. A pending that
    // straddles the set is CorrectionNotLocal.
    void decrypt(sim::StateVector& state, const std::vector<QubitLabel>& labels);

    // Applies one pending gate on still-encrypted co-held qubits: the gate
    // is executed physically and the pads of its qubits are conjugated, so
    // the qubits stay encrypted but the pending disappears.
    void resolve_pending(sim::StateVector& state, std::size_t index);

    // Z-measurement decryption with the pending-correction guard.
    int decrypt_measurement_of(QubitLabel q, int outcome) const;

    void forget(QubitLabel q);  // drop the key of a measured-and-done qubit

    // Record a key whose X/Z pulses were applied by someone else.
    void adopt(QubitLabel q, PadKey key);

    std::string to_json() const;

  private:
    void pauli_conjugate_rule(const GateInstance& gate);  // Clifford part only
    void normalize();                                     // drop identity pads

    std::map<QubitLabel, PadKey> pauli_;
    std::vector<GateInstance> pending_;  // index 0 = newest = applied first
};

}  // namespace qdel::crypto
