#include "qdel/adversary/behavior.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qdel/errors.hpp"

namespace qdel::adversary {

ServerBehavior ServerBehavior::drop_random(int count, DropScope scope, std::uint64_t seed) {
    ServerBehavior b;
    b.kind = Kind::DropRandomGate;
    b.drop_count = count;
    b.scope = scope;
    b.seed = seed;
    return b;
}

ServerBehavior ServerBehavior::measure_and_resend(std::vector<sim::QubitLabel> wires,
                                                  std::uint64_t seed) {
    ServerBehavior b;
    b.kind = Kind::MeasureAndResend;
    b.probe_wires = std::move(wires);
    b.seed = seed;
    return b;
}

// Grammar: "honest" | "drop:<count>[:all|original|verifier]" | "probe:w1,w2,..."
ServerBehavior parse_behavior(const std::string& text) {
    if (text.empty() || text == "honest") return ServerBehavior::honest();
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts[0] == "drop") {
            if (parts.size() < 2) throw BadArgument("drop needs a count");
            int count = std::stoi(parts[1]);
            DropScope scope = DropScope::All;
            if (parts.size() > 2) {
                if (parts[2] == "all") scope = DropScope::All;
                else if (parts[2] == "original") scope = DropScope::OriginalOnly;
                else if (parts[2] == "verifier") scope = DropScope::VerifierOnly;
                else throw BadArgument("unknown drop scope: " + parts[2]);
            }
            return ServerBehavior::drop_random(count, scope, 1);
        }
        if (parts[0] == "probe") {
            if (parts.size() < 2) throw BadArgument("probe needs wire labels");
            std::vector<sim::QubitLabel> wires;
            std::stringstream ws(parts[1]);
            while (std::getline(ws, item, ',')) wires.push_back(std::stoul(item));
            return ServerBehavior::measure_and_resend(std::move(wires), 1);
        }
    } catch (const std::invalid_argument&) {
        throw BadArgument("malformed adversary spec: " + text);
    }
    throw BadArgument("unknown adversary: " + text);
}

std::string AdversaryLog::to_json() const {
    nlohmann::json j;
    j["dropped_seqs"] = dropped_seqs;
    j["probes"] = nlohmann::json::array();
    for (const auto& p : probes) j["probes"].push_back({{"wire", p.wire}, {"outcome", p.outcome}});
    return j.dump(2);
}

std::vector<int> pick_drop_indices(int eligible, int count, Rng& rng) {
    if (count < 0) throw BadArgument("negative drop count");
    count = std::min(count, eligible);
    // Partial Fisher-Yates over the index range.
    std::vector<int> idx(static_cast<size_t>(eligible));
    for (int i = 0; i < eligible; ++i) idx[static_cast<size_t>(i)] = i;
    for (int i = 0; i < count; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(eligible - i)));
        std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    }
    idx.resize(static_cast<size_t>(count));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace qdel::adversary
