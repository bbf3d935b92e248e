#include "qdel/verify/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "qdel/errors.hpp"
#include "qdel/verify/verifier.hpp"

namespace qdel::verify {

namespace {

constexpr int kGatesPerQubit = 3;
// Full protocol runs are cheap enough up to this joint register size; the
// 2^20-amplitude cases switch to sampled drop choices.
constexpr int kFullRunQubitLimit = 12;

circuit::TaggedCircuit x_chain(int n, int gates, Rng& rng) {
    circuit::TaggedCircuit c(n);
    for (int i = 0; i < gates; ++i)
        c.add(sim::make_gate(sim::GateKind::X,
                             {static_cast<sim::QubitLabel>(
                                 rng.below(static_cast<std::uint64_t>(n)))}),
              circuit::PrivacyTag::PublicOp);
    return c;
}

// A client that only routes and pads; with nothing applied locally, every
// circuit gate lands in the server's instruction stream, so the drop pool
// sizes equal the gate counts exactly.
circuit::CapabilityProfile routing_only_profile() {
    circuit::CapabilityProfile p;
    p.max_client_qubits = 2;
    p.multiqubit_allowed = true;  // memory-offload entry check; no gate uses it
    p.allowed_single_qubit_gates = {};
    p.can_measure = false;
    p.can_swap_ports = true;
    return p;
}

InterleaveConfig base_config(int shots) {
    InterleaveConfig ic;
    ic.protocol = protocol::ProtocolKind::P2;
    ic.profile = routing_only_profile();
    ic.behavior = adversary::ServerBehavior::drop_random(1);
    ic.shots = shots;
    ic.trap_density = 0.0;
    return ic;
}

// Forces drops onto each side in turn: decoy hits must always flag, workload
// hits never may. Also reports the instructed-gate pool sizes.
void validate_drop_sides(const circuit::TaggedCircuit& original, const VerifierSpec& spec,
                         std::uint64_t seed, long& instr_orig, long& instr_verif) {
    for (int i = 0; i < 4; ++i) {
        Rng r = Rng(seed).split(0x700u + static_cast<std::uint64_t>(i));
        InterleaveConfig ic = base_config(1);
        ic.behavior.scope = adversary::DropScope::VerifierOnly;
        DetectionReport rep = run_interleaved(original, spec, ic, r);
        if (rep.verdict != Verdict::Dishonest)
            throw std::logic_error("a dropped decoy gate went unnoticed");
        instr_orig = rep.instructed_original;
        instr_verif = rep.instructed_verifier;
    }
    for (int i = 0; i < 4; ++i) {
        Rng r = Rng(seed).split(0x800u + static_cast<std::uint64_t>(i));
        InterleaveConfig ic = base_config(1);
        ic.behavior.scope = adversary::DropScope::OriginalOnly;
        DetectionReport rep = run_interleaved(original, spec, ic, r);
        if (rep.verdict != Verdict::Honest)
            throw std::logic_error("a workload-only drop tripped the decoys");
    }
}

long full_run_trials(const circuit::TaggedCircuit& original, const VerifierSpec& spec, int shots,
                     long trials, std::uint64_t seed, int jobs) {
    long nondetect = 0;
    const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : nondetect) \
    if (threads > 1)
    for (long t = 0; t < trials; ++t) {
        Rng trng = Rng(seed).split(16 + static_cast<std::uint64_t>(t));
        InterleaveConfig ic = base_config(shots);
        DetectionReport rep = run_interleaved(original, spec, ic, trng);
        nondetect += rep.mismatched_shots == 0;
    }
    return nondetect;
}

long sampled_trials(int shots, long trials, std::uint64_t seed, long instr_orig, long instr_verif,
                    int jobs) {
    long nondetect = 0;
    const auto pool = static_cast<std::uint64_t>(instr_orig + instr_verif);
    const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : nondetect) \
    if (threads > 1)
    for (long t = 0; t < trials; ++t) {
        Rng trng = Rng(seed).split(16 + static_cast<std::uint64_t>(t));
        bool all_original = true;
        for (int s = 0; s < shots; ++s)
            all_original =
                all_original && trng.below(pool) < static_cast<std::uint64_t>(instr_orig);
        nondetect += all_original;
    }
    return nondetect;
}

}  // namespace

ExperimentRow run_detection_experiment(int n, int n_prime, int shots, long trials,
                                       std::uint64_t seed, int jobs) {
    if (n < 1 || n_prime < 1 || shots < 1 || trials < 1)
        throw BadArgument("detection experiment arguments must be positive");

    Rng setup = Rng(seed).split(1);
    const circuit::TaggedCircuit original = x_chain(n, kGatesPerQubit * n, setup);
    // One single-qubit decoy chain per verifier qubit keeps the gate ratio
    // equal to the qubit ratio, so both analytic readings coincide here.
    VerifierSpec spec = build_certified_verifier(n_prime, n_prime, setup, kGatesPerQubit);

    ExperimentRow row;
    row.n = n;
    row.n_prime = n_prime;
    row.shots = shots;
    row.trials = trials;
    row.analytic_log10 = nondetection_log10(n, n_prime, shots);
    row.analytic_nondetect = nondetection_probability(n, n_prime, shots);

    long instr_orig = 0;
    long instr_verif = 0;
    validate_drop_sides(original, spec, seed, instr_orig, instr_verif);
    row.instructed_original = instr_orig;
    row.instructed_verifier = instr_verif;
    row.analytic_gates_log10 = nondetection_log10_gates(instr_orig, instr_verif, shots);
    row.analytic_gates = nondetection_probability_gates(instr_orig, instr_verif, shots);

    const long hits = n + n_prime <= kFullRunQubitLimit
                          ? full_run_trials(original, spec, shots, trials, seed, jobs)
                          : sampled_trials(shots, trials, seed, instr_orig, instr_verif, jobs);
    row.empirical_nondetect = static_cast<double>(hits) / static_cast<double>(trials);
    return row;
}

std::string ExperimentRow::csv_header() {
    return "N,N_prime,n,trials,empirical_nondetect,analytic_nondetect";
}

std::string ExperimentRow::csv_row() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%ld,%.6g,%s", n, n_prime, shots, trials,
                  empirical_nondetect, format_probability_log10(analytic_log10).c_str());
    return buf;
}

}  // namespace qdel::verify
