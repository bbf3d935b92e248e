#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdel/circuit/passes.hpp"
#include "qdel/sim/gate.hpp"

namespace qdel::protocol {

enum class Actor { Client, Server1, Server2, CommonNode, KeyService };

const char* actor_name(Actor a);

// One wire-level message. Wire labels are what the other party sees; the
// client keeps the wire<->logical mapping to itself. RelabelNotice is only
// ever addressed to the client.
struct Message {
    enum class Type { QubitTransfer, Instruction, MeasureRequest, MeasureResult, RelabelNotice };

    Type type;
    Actor from = Actor::Client;
    Actor to = Actor::Server1;
    std::uint64_t seq = 0;

    std::vector<sim::QubitLabel> wires;  // QubitTransfer / MeasureRequest
    sim::GateInstance gate;              // Instruction (wire targets)
    sim::QubitLabel wire = 0;            // MeasureResult
    int bit = 0;                         // MeasureResult
    circuit::Permutation relabel;        // RelabelNotice

    std::string to_json() const;
};

class Transcript {
  public:
    // Assigns the global sequence number and stores the message.
    const Message& append(Message m);

    const std::vector<Message>& messages() const { return log_; }
    std::size_t size() const { return log_.size(); }

    std::string to_jsonl() const;

    // Everything the given server ever saw or emitted, as one canonical JSON
    // string. Two runs are indistinguishable to that server exactly when
    // these strings are byte-identical.
    std::string server_view_json(Actor server) const;

  private:
    std::vector<Message> log_;
    std::uint64_t next_seq_ = 0;
};

}  // namespace qdel::protocol
