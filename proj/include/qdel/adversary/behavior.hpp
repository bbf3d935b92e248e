#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdel/random.hpp"
#include "qdel/sim/gate.hpp"

namespace qdel::adversary {

// Which instructed gates a dropping server is willing to touch. Scopes other
// than All are experiment instrumentation: a real server cannot tell original
// from verifier gates (that blindness is what the experiments measure).
enum class DropScope { All, OriginalOnly, VerifierOnly };

struct ServerBehavior {
    enum class Kind { Honest, DropRandomGate, MeasureAndResend };

    Kind kind = Kind::Honest;
    int drop_count = 0;
    DropScope scope = DropScope::All;
    std::vector<sim::QubitLabel> probe_wires;  // MeasureAndResend
    std::uint64_t seed = 1;

    static ServerBehavior honest() { return {}; }
    static ServerBehavior drop_random(int count, DropScope scope = DropScope::All,
                                      std::uint64_t seed = 1);
    static ServerBehavior measure_and_resend(std::vector<sim::QubitLabel> wires,
                                             std::uint64_t seed);
};

ServerBehavior parse_behavior(const std::string& text);

// Private notebook of a cheating server; never part of the honest transcript.
struct AdversaryLog {
    struct Probe {
        sim::QubitLabel wire;
        int outcome;
    };
    std::vector<std::uint64_t> dropped_seqs;  // transcript seq of skipped instructions
    std::vector<Probe> probes;

    bool empty() const { return dropped_seqs.empty() && probes.empty(); }
    std::string to_json() const;
};

// Deciding which of `eligible` instructions get dropped, given the total
// count observed in a counting pass. Uniform without replacement.
std::vector<int> pick_drop_indices(int eligible, int count, Rng& rng);

}  // namespace qdel::adversary
