// Batch runner: scenarios/circuits under the delegation protocols, plus the
// verification detection experiment. Artifacts land in --out as JSON/JSONL.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdel/circuit/scenarios.hpp"
#include "qdel/circuit/tagged_circuit.hpp"
#include "qdel/errors.hpp"
#include "qdel/protocol/engine.hpp"
#include "qdel/random.hpp"
#include "qdel/sim/state_vector.hpp"
#include "qdel/verify/experiment.hpp"
#include "qdel/verify/verifier.hpp"

namespace {

using namespace qdel;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadArgument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text << '\n';
}

circuit::TaggedCircuit load_circuit(const std::string& target, const std::vector<double>& angles) {
    if (circuit::is_scenario_name(target)) return circuit::scenario_by_name(target, angles);
    if (!angles.empty()) throw BadArgument("--angles only applies to built-in scenarios");
    return circuit::TaggedCircuit::from_json(slurp(target));
}

circuit::CapabilityProfile profile_for(protocol::ProtocolKind pk, int m,
                                       const std::string& profile_path) {
    if (!profile_path.empty()) return circuit::CapabilityProfile::from_json(slurp(profile_path));
    switch (pk) {
        case protocol::ProtocolKind::P2: return circuit::CapabilityProfile::full(m);
        case protocol::ProtocolKind::P3: return circuit::CapabilityProfile::one_qubit(m);
        case protocol::ProtocolKind::P4: break;
    }
    circuit::CapabilityProfile p;  // classical steering only
    p.max_client_qubits = 0;
    p.can_swap_ports = true;
    return p;
}

sim::StateVector reference_state(const circuit::TaggedCircuit& c) {
    sim::StateVector s;
    for (int q = 0; q < c.n_qubits(); ++q) s.add_qubit(static_cast<sim::QubitLabel>(q));
    for (std::size_t i = 0; i < c.size(); ++i) s.apply(c[i].gate);
    return s;
}

std::string outcome_string(const std::map<sim::QubitLabel, int>& measured, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) s[static_cast<std::size_t>(q)] += static_cast<char>(measured.at(static_cast<sim::QubitLabel>(q)));
    return s;
}

struct RunFlags {
    std::string target;
    std::string protocol = "p2";
    int m = 2;
    std::string profile_path;
    std::uint64_t seed = 1;
    int shots = 1000;
    double trap_density = 0.0;
    bool verify = false;
    int verifier_qubits = 0;
    std::string adversary = "honest";
    int jobs = 1;
    std::string out_dir = "out";
    std::vector<double> angles;
};

int cmd_run(const RunFlags& f) {
    const circuit::TaggedCircuit circ = load_circuit(f.target, f.angles);
    const int n = circ.n_qubits();
    const protocol::ProtocolKind pk = f.protocol == "p2"   ? protocol::ProtocolKind::P2
                                      : f.protocol == "p3" ? protocol::ProtocolKind::P3
                                                           : protocol::ProtocolKind::P4;
    protocol::EngineConfig base;
    base.protocol = pk;
    base.profile = profile_for(pk, f.m, f.profile_path);
    base.trap_density = f.trap_density;
    base.behavior = adversary::parse_behavior(f.adversary);

    std::printf("circuit %s: %d qubits, %zu gates\n", f.target.c_str(), n, circ.size());
    std::printf("protocol %s (M=%d), seed %llu, adversary %s\n", f.protocol.c_str(),
                base.profile.max_client_qubits, static_cast<unsigned long long>(f.seed),
                f.adversary.c_str());

    const std::filesystem::path out(f.out_dir);
    std::filesystem::create_directories(out);
    bool pass = true;

    // Fidelity of the decrypted joint state against a plain simulation.
    const sim::StateVector ref = reference_state(circ);
    protocol::EngineConfig sv = base;
    sv.measure_outputs = false;
    sv.behavior.seed = Rng(f.seed).split(99).bits();
    protocol::RunResult analysis = protocol::run_protocol(circ, sv, Rng(f.seed).split(1));
    const double fid = sim::fidelity_up_to_global_phase(ref, analysis.final_state);
    const bool fid_ok = fid >= 1.0 - 1e-9;
    pass = pass && fid_ok;
    std::printf("fidelity vs reference: %.12f (%s)\n", fid, fid_ok ? "pass" : "FAIL");

    // Sampled outcome distribution, shot-parallel with per-shot streams.
    std::vector<std::string> outcomes(static_cast<std::size_t>(std::max(0, f.shots)));
    std::optional<protocol::RunResult> first;
    double tv = 0.0;
    bool tv_ok = true;
    if (f.shots > 0) {
        const int threads = std::max(1, f.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
        for (int s = 0; s < f.shots; ++s) {
            protocol::EngineConfig mc = base;
            mc.behavior.seed = Rng(f.seed).split(7000 + static_cast<std::uint64_t>(s)).bits();
            protocol::RunResult r =
                protocol::run_protocol(circ, mc, Rng(f.seed).split(100 + static_cast<std::uint64_t>(s)));
            outcomes[static_cast<std::size_t>(s)] = outcome_string(r.measured, n);
            if (s == 0) {
#pragma omp critical
                first = std::move(r);
            }
        }
        std::map<std::string, long> counts;
        for (const auto& o : outcomes) counts[o] += 1;

        nlohmann::json dist;
        dist["shots"] = f.shots;
        dist["counts"] = counts;
        if (n <= 12) {
            std::map<std::string, double> refp;
            const auto& amps = ref.amplitudes();
            for (std::size_t idx = 0; idx < amps.size(); ++idx) {
                const double p = std::norm(amps[idx]);
                if (p < 1e-12) continue;
                std::string key(static_cast<std::size_t>(n), '0');
                for (int q = 0; q < n; ++q)
                    if ((idx >> ref.position(static_cast<sim::QubitLabel>(q))) & 1u)
                        key[static_cast<std::size_t>(q)] = '1';
                refp[key] += p;
            }
            for (const auto& [key, p] : refp) {
                auto it = counts.find(key);
                const double emp = it == counts.end()
                                       ? 0.0
                                       : static_cast<double>(it->second) / f.shots;
                tv += std::abs(emp - p);
            }
            for (const auto& [key, c] : counts)
                if (!refp.count(key)) tv += static_cast<double>(c) / f.shots;
            tv *= 0.5;
            const double tv_limit =
                3.0 * std::sqrt(static_cast<double>(std::size_t{1} << n) / (4.0 * f.shots)) + 0.01;
            tv_ok = tv <= tv_limit;
            pass = pass && tv_ok;
            dist["reference"] = refp;
            dist["tv_distance"] = tv;
            dist["tv_limit"] = tv_limit;
            std::printf("distribution: %d shots, tv %.4f (limit %.4f, %s)\n", f.shots, tv,
                        tv_limit, tv_ok ? "pass" : "FAIL");
        } else {
            std::printf("distribution: %d shots (register too wide for the reference check)\n",
                        f.shots);
        }
        spit(out / "distribution.json", dist.dump(2));
        spit(out / "transcript.jsonl", first->transcript.to_jsonl());
        if (!first->adversary_log.empty())
            spit(out / "adversary_log.json", first->adversary_log.to_json());
    }

    {
        nlohmann::json j = nlohmann::json::parse(
            (f.shots > 0 ? first->summary : analysis.summary).to_json());
        j["fidelity"] = fid;
        j["pass"] = pass;
        spit(out / "summary.json", j.dump(2));
    }

    if (f.verify) {
        Rng vr = Rng(f.seed).split(5);
        const int nprime = f.verifier_qubits > 0 ? f.verifier_qubits : n;
        int p_v = 1;
        for (int p = std::min({10, nprime, n}); p >= 1; --p)
            if (nprime % p == 0) {
                p_v = p;
                break;
            }
        verify::VerifierSpec spec = verify::build_verifier(circ, nprime, nprime / p_v, vr);
        verify::InterleaveConfig ic;
        ic.protocol = pk;
        ic.profile = base.profile;
        ic.behavior = base.behavior;
        ic.shots = std::max(1, f.shots);
        ic.trap_density = f.trap_density;
        verify::DetectionReport rep = verify::run_interleaved(circ, spec, ic, vr);
        spit(out / "verification.json", rep.to_json());
        std::printf("verification: verdict %s, %d/%d mismatched shots (decoy pool %ld of %ld "
                    "instructions)\n",
                    verify::verdict_name(rep.verdict), rep.mismatched_shots, rep.shots,
                    rep.instructed_verifier, rep.instructed_original + rep.instructed_verifier);
        pass = pass && rep.verdict == verify::Verdict::Honest;
    }

    std::printf("artifacts in %s\n", out.string().c_str());
    return pass ? 0 : 1;
}

struct ExperimentFlags {
    int n = 4;
    int n_prime = 4;
    int shots = 10;
    long trials = 10000;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out_path;
};

int cmd_experiment(const ExperimentFlags& f) {
    verify::ExperimentRow row =
        verify::run_detection_experiment(f.n, f.n_prime, f.shots, f.trials, f.seed, f.jobs);
    const std::string text = verify::ExperimentRow::csv_header() + "\n" + row.csv_row();
    std::printf("%s\n", text.c_str());
    std::printf("# gate-count reading: %s (pools %ld original / %ld decoy)\n",
                verify::format_probability_log10(row.analytic_gates_log10).c_str(),
                row.instructed_original, row.instructed_verifier);
    if (!f.out_path.empty()) spit(f.out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Private delegated quantum computation, simulated end to end"};
    app.require_subcommand(1);

    RunFlags rf;
    CLI::App* run = app.add_subcommand("run", "Execute a scenario or circuit JSON under a protocol");
    run->add_option("target", rf.target, "grover3 | qaoa3 | qnn3 | circuit JSON path")->required();
    run->add_option("--protocol", rf.protocol, "p2 | p3 | p4")
        ->check(CLI::IsMember({"p2", "p3", "p4"}));
    run->add_option("--M", rf.m, "client qubit capacity");
    run->add_option("--profile", rf.profile_path, "capability profile JSON file");
    run->add_option("--seed", rf.seed);
    run->add_option("--shots", rf.shots);
    run->add_option("--trap-density", rf.trap_density, "decoy identity-pair rate");
    run->add_flag("--verify", rf.verify, "interleave decoy subcircuits and check them");
    run->add_option("--verifier-qubits", rf.verifier_qubits, "decoy qubit total (default N)");
    run->add_option("--adversary", rf.adversary, "honest | drop:<k>[:scope] | probe:w1,w2,...");
    run->add_option("--jobs", rf.jobs, "worker threads for shots");
    run->add_option("--out", rf.out_dir, "artifact directory");
    run->add_option("--angles", rf.angles, "scenario angle overrides")->delimiter(',');

    ExperimentFlags ef;
    CLI::App* exp = app.add_subcommand(
        "verify-experiment", "Monte-Carlo detection rate of a gate-dropping server");
    exp->add_option("--N", ef.n, "workload qubits");
    exp->add_option("--nprime", ef.n_prime, "decoy qubits");
    exp->add_option("--n", ef.shots, "shots per trial");
    exp->add_option("--trials", ef.trials);
    exp->add_option("--seed", ef.seed);
    exp->add_option("--jobs", ef.jobs);
    exp->add_option("--out", ef.out_path, "also write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(rf);
        return cmd_experiment(ef);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
