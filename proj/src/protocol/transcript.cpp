#include "qdel/protocol/message.hpp"

#include <json.hpp>

#include "qdel/errors.hpp"

namespace qdel::protocol {

using nlohmann::json;

const char* actor_name(Actor a) {
    switch (a) {
        case Actor::Client: return "client";
        case Actor::Server1: return "server1";
        case Actor::Server2: return "server2";
        case Actor::CommonNode: return "common-node";
        case Actor::KeyService: return "key-service";
    }
    return "?";
}

namespace {

const char* type_name(Message::Type t) {
    switch (t) {
        case Message::Type::QubitTransfer: return "qubit-transfer";
        case Message::Type::Instruction: return "instruction";
        case Message::Type::MeasureRequest: return "measure-request";
        case Message::Type::MeasureResult: return "measure-result";
        case Message::Type::RelabelNotice: return "relabel-notice";
    }
    return "?";
}

json message_json(const Message& m) {
    json j;
    j["seq"] = m.seq;
    j["from"] = actor_name(m.from);
    j["to"] = actor_name(m.to);
    j["type"] = type_name(m.type);
    switch (m.type) {
        case Message::Type::QubitTransfer:
        case Message::Type::MeasureRequest:
            j["wires"] = m.wires;
            break;
        case Message::Type::Instruction:
            j["kind"] = sim::gate_name(m.gate.kind);
            j["wires"] = m.gate.targets;
            if (!m.gate.params.empty()) j["params"] = m.gate.params;
            break;
        case Message::Type::MeasureResult:
            j["wire"] = m.wire;
            j["bit"] = m.bit;
            break;
        case Message::Type::RelabelNotice: {
            json p = json::object();
            for (const auto& [from_w, to_w] : m.relabel) p[std::to_string(from_w)] = to_w;
            j["relabel"] = p;
            break;
        }
    }
    return j;
}

}  // namespace

std::string Message::to_json() const { return message_json(*this).dump(); }

const Message& Transcript::append(Message m) {
    if (m.type == Message::Type::RelabelNotice && m.to != Actor::Client)
        throw ProtocolViolation("relabel notices are client-side only");
    m.seq = next_seq_++;
    log_.push_back(std::move(m));
    return log_.back();
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (const auto& m : log_) {
        out += m.to_json();
        out += '\n';
    }
    return out;
}

std::string Transcript::server_view_json(Actor server) const {
    json events = json::array();
    for (const auto& m : log_) {
        if (m.from != server && m.to != server) continue;
        json e = message_json(m);
        // The server only knows which direction a message went, not the
        // global sequence assigned by the bookkeeper.
        e.erase("seq");
        e["dir"] = (m.to == server) ? "in" : "out";
        events.push_back(std::move(e));
    }
    json view;
    view["server"] = actor_name(server);
    view["events"] = std::move(events);
    return view.dump(2);
}

}  // namespace qdel::protocol
