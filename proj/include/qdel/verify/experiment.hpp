#pragma once

#include <cstdint>
#include <string>

namespace qdel::verify {

// One detection-calibration row: an X-chain workload of 3N gates against
// certified X-chain decoys totalling 3N' gates, run under the memory-offload
// protocol with a client that routes but applies nothing, against a server
// that drops one uniformly chosen instruction per shot. A trial counts as
// non-detected when none of its `shots` drops hits a decoy.
struct ExperimentRow {
    int n = 0;
    int n_prime = 0;
    int shots = 0;
    long trials = 0;
    double empirical_nondetect = 0.0;
    double analytic_nondetect = 0.0;  // qubit-count reading; underflows past ~1e-308
    double analytic_log10 = 0.0;
    double analytic_gates = 0.0;  // instructed-gate reading the drops actually follow
    double analytic_gates_log10 = 0.0;
    long instructed_original = 0;
    long instructed_verifier = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

// Runs `trials` independent n-shot verifications. Small joint registers are
// executed in full; larger ones sample the drop choices after spot-checking
// both drop sides against real protocol runs (the decoys are certified, so
// the choice alone decides detection). jobs > 1 parallelizes trials.
ExperimentRow run_detection_experiment(int n, int n_prime, int shots, long trials,
                                       std::uint64_t seed, int jobs = 0);

}  // namespace qdel::verify
