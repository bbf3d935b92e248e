#pragma once

// Shared machinery between the delegation flows. Not installed; the public
// surface is engine.hpp.

#include <map>
#include <set>
#include <vector>

#include "qdel/circuit/passes.hpp"
#include "qdel/crypto/pad.hpp"
#include "qdel/protocol/engine.hpp"

namespace qdel::protocol::detail {

using sim::QubitLabel;

struct EngineCore {
    EngineCore(const circuit::TaggedCircuit& input, const EngineConfig& cfg, Rng rng,
               std::vector<int> drop_set, bool counting);

    // --- run entry points -------------------------------------------------
    void execute_offload();   // protocols 2 and 3 (one server)
    void execute_two_server();  // protocol 4

    RunResult take_result();

    // Number of drop-eligible instructions seen (valid after a counting run).
    int eligible_instructions() const { return eligible_seen_; }

    // --- configuration / rewritten circuit ---------------------------------
    EngineConfig cfg;
    circuit::TaggedCircuit circ;   // after rzz decomposition + trap insertion
    circuit::TrapPlan plan;
    std::vector<int> origin;       // per rewritten gate: 0 original, 1 verifier, -1 trap
    int n_qubits = 0;

    // --- live state ---------------------------------------------------------
    sim::StateVector state;        // ground truth, logical labels
    crypto::CorrectionFrame frame;
    crypto::KeySource keys;
    Rng rng_shuffle;
    Rng rng_measure;
    Rng rng_split;                 // protocol-4 angle shares
    Rng rng_adv;

    std::map<QubitLabel, Actor> holder;       // live logical qubits only
    std::map<QubitLabel, QubitLabel> wire_of;     // logical -> wire
    std::map<QubitLabel, QubitLabel> logical_of;  // wire -> logical
    std::vector<bool> completed;
    std::map<QubitLabel, int> measured;
    Transcript transcript;
    RunSummary summary;
    adversary::AdversaryLog adv_log;

    // Adversary bookkeeping.
    std::vector<int> drop_set;     // sorted eligible-instruction indices to skip
    bool counting = false;
    int eligible_seen_ = 0;
    std::set<QubitLabel> probed;   // logical labels already probed

  private:
    // --- helpers ------------------------------------------------------------
    int M() const { return cfg.profile.max_client_qubits; }
    QubitLabel wire(QubitLabel logical) const;
    QubitLabel logical(QubitLabel w) const;
    int client_holdings() const;
    int free_slots() const;
    std::set<QubitLabel> client_plain() const;
    bool client_capable(int gate_idx) const;
    bool conjugable(sim::GateKind kind) const;
    bool delegable(int gate_idx) const;
    int first_uncompleted() const;
    bool all_completed() const;
    sim::GateInstance wire_gate(int gate_idx) const;

    void create_qubit(QubitLabel q);
    void note_holdings();
    void encrypt_and_send(std::vector<QubitLabel> logicals, Actor to, bool rekey);
    void receive(const std::vector<QubitLabel>& logicals, Actor from);
    void instruct(int gate_idx, Actor server, const sim::GateInstance& override_gate,
                  bool completes);
    void instruct(int gate_idx, Actor server);
    void instruct_raw(const sim::GateInstance& logical_gate, Actor server);
    void transfer(std::vector<QubitLabel> logicals, Actor from, Actor to);
    void client_apply(int gate_idx);
    void do_frontier();
    void measure_ready();
    void measure_one(QubitLabel q);
    bool server_step(Actor server);
    void ping_marker(Actor server);
    void resolve_pending_by_fetch(std::size_t pending_idx);
    void fetch_for_client(int gate_idx);
    void push_targets_to_server(int gate_idx, Actor server);
    void shuffle_wires(const std::vector<QubitLabel>& logicals, bool notify_client, Actor mover);
    void exchange_loop(Actor server);
    void finalize();

    // Protocol-4 specific helpers (defined in protocol4.cpp).
    void hop_between_servers(Actor from_server, Actor to_server);
    void p4_final_measure(Actor enc_server, Actor meas_server);

    friend RunResult qdel::protocol::run_protocol(const circuit::TaggedCircuit&,
                                                  const EngineConfig&, Rng);
};

}  // namespace qdel::protocol::detail
