#include "qdel/verify/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "qdel/errors.hpp"
#include "qdel/sim/state_vector.hpp"

namespace qdel::verify {

using circuit::PrivacyTag;
using circuit::TaggedCircuit;
using sim::GateInstance;
using sim::GateKind;

int VerifierSpec::total_gates() const {
    int n = 0;
    for (const auto& c : subcircuits) n += static_cast<int>(c.size());
    return n;
}

std::map<GateKind, double> kind_histogram(const TaggedCircuit& c) {
    std::map<GateKind, double> h;
    if (c.size() == 0) return h;
    for (std::size_t i = 0; i < c.size(); ++i) h[c[i].gate.kind] += 1.0;
    for (auto& [kind, v] : h) v /= static_cast<double>(c.size());
    return h;
}

const char* verdict_name(Verdict v) { return v == Verdict::Honest ? "honest" : "dishonest"; }

namespace {

constexpr double kPi = std::numbers::pi;

void check_partition(int n_prime, int k) {
    if (k < 1 || n_prime < 1)
        throw BadArgument("verifier wants positive qubit and subcircuit counts");
    if (n_prime % k != 0)
        throw BadArgument("subcircuit count must divide the verifier qubit total");
    if (n_prime / k > 10)
        throw TooLargeToSimulate("verifier subcircuits of " + std::to_string(n_prime / k) +
                                 " qubits exceed the local simulation budget of 10");
}

// Integer apportionment of `slots` by frequency: floor the quotas, then hand
// leftover slots to the largest remainders. Stays within one slot of every
// quota, so relative histogram error shrinks as 1/(f*slots).
std::vector<std::pair<GateKind, int>> apportion(const std::map<GateKind, double>& freq,
                                                int slots) {
    struct Row {
        GateKind kind;
        double rem;
        int count;
    };
    std::vector<Row> rows;
    int used = 0;
    for (const auto& [kind, f] : freq) {
        const double quota = f * slots;
        const int base = static_cast<int>(std::floor(quota));
        rows.push_back({kind, quota - base, base});
        used += base;
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.rem > b.rem; });
    for (std::size_t i = 0; used < slots; ++i, ++used) rows[i % rows.size()].count += 1;
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.kind < b.kind; });
    std::vector<std::pair<GateKind, int>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r.kind, r.count);
    return out;
}

std::vector<QubitLabel> pick_targets(int arity, int p_v, Rng& rng) {
    std::vector<QubitLabel> pool(static_cast<std::size_t>(p_v));
    for (int i = 0; i < p_v; ++i) pool[static_cast<std::size_t>(i)] = static_cast<QubitLabel>(i);
    for (int i = 0; i < arity; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(p_v - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(arity));
    return pool;
}

// Z outcome of a freshly simulated subcircuit; throws if any bit is random.
std::vector<int> simulate_outcome(const TaggedCircuit& sub) {
    sim::StateVector s;
    for (int q = 0; q < sub.n_qubits(); ++q) s.add_qubit(static_cast<QubitLabel>(q));
    for (std::size_t i = 0; i < sub.size(); ++i) s.apply(sub[i].gate);
    std::vector<int> bits(static_cast<std::size_t>(sub.n_qubits()));
    for (int q = 0; q < sub.n_qubits(); ++q) {
        const int pos = s.position(static_cast<QubitLabel>(q));
        double p1 = 0.0;
        const auto& amps = s.amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i)
            if ((i >> pos) & 1u) p1 += std::norm(amps[i]);
        if (p1 > 1e-9 && p1 < 1.0 - 1e-9)
            throw BadArgument("verifier subcircuit has a nondeterministic outcome");
        bits[static_cast<std::size_t>(q)] = p1 > 0.5;
    }
    return bits;
}

}  // namespace

VerifierSpec build_verifier(const TaggedCircuit& original, int n_prime, int k, Rng& rng,
                            int gates_per_subcircuit) {
    check_partition(n_prime, k);
    const int p_v = n_prime / k;

    std::map<GateKind, double> freq;
    double kept = 0.0;
    for (const auto& [kind, f] : kind_histogram(original)) {
        if (sim::gate_arity(kind) > p_v) continue;
        freq[kind] = f;
        kept += f;
    }
    if (freq.empty()) {
        freq[GateKind::X] = 1.0;
        kept = 1.0;
    }
    for (auto& [kind, f] : freq) f /= kept;

    const int half =
        gates_per_subcircuit > 0
            ? std::max(1, gates_per_subcircuit / 2)
            : std::max(1, static_cast<int>(std::llround(static_cast<double>(original.size()) *
                                                        p_v / (2.0 * original.n_qubits()))));

    VerifierSpec spec;
    spec.k = k;
    spec.p_v = p_v;
    spec.n_prime = n_prime;
    const auto counts = apportion(freq, half);
    for (int s = 0; s < k; ++s) {
        std::vector<GateKind> kinds;
        for (const auto& [kind, c] : counts)
            kinds.insert(kinds.end(), static_cast<std::size_t>(c), kind);
        for (std::size_t i = kinds.size(); i > 1; --i)
            std::swap(kinds[i - 1], kinds[rng.below(i)]);

        TaggedCircuit sub(p_v);
        std::vector<circuit::TaggedGate> forward;
        for (GateKind kind : kinds) {
            std::vector<double> params;
            if (sim::gate_param_count(kind) == 1) params = {rng.uniform(0.0, 2.0 * kPi)};
            GateInstance g = sim::make_gate(kind, pick_targets(sim::gate_arity(kind), p_v, rng),
                                            std::move(params));
            const PrivacyTag tag = sim::gate_param_count(g.kind) == 1 ? PrivacyTag::PrivateAngle
                                                                      : PrivacyTag::PublicOp;
            sub.add(g, tag);
            forward.push_back({std::move(g), tag});
        }
        // The un-compute half; S and T have no kind-level inverse and become
        // the same diagonal as an RZ, up to a phase the outcome ignores.
        for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
            const GateInstance& g = it->gate;
            if (g.kind == GateKind::S)
                sub.add(sim::make_gate(GateKind::RZ, g.targets, {-kPi / 2.0}),
                        PrivacyTag::PrivateAngle);
            else if (g.kind == GateKind::T)
                sub.add(sim::make_gate(GateKind::RZ, g.targets, {-kPi / 4.0}),
                        PrivacyTag::PrivateAngle);
            else
                sub.add(sim::inverse_gate(g), it->tag);
        }
        spec.expected.push_back(simulate_outcome(sub));
        spec.subcircuits.push_back(std::move(sub));
    }
    return spec;
}

VerifierSpec build_certified_verifier(int n_prime, int k, Rng& rng, int gates_per_subcircuit) {
    check_partition(n_prime, k);
    if (gates_per_subcircuit < 1) throw BadArgument("certified subcircuits need at least one gate");
    const int p_v = n_prime / k;
    VerifierSpec spec;
    spec.k = k;
    spec.p_v = p_v;
    spec.n_prime = n_prime;
    for (int s = 0; s < k; ++s) {
        TaggedCircuit sub(p_v);
        for (int i = 0; i < gates_per_subcircuit; ++i)
            sub.add(sim::make_gate(
                        GateKind::X,
                        {static_cast<QubitLabel>(rng.below(static_cast<std::uint64_t>(p_v)))}),
                    PrivacyTag::PublicOp);
        spec.expected.push_back(simulate_outcome(sub));
        spec.subcircuits.push_back(std::move(sub));
    }
    if (!certify_single_drop_detection(spec))
        throw std::logic_error("X-chain drop certification failed");
    return spec;
}

bool certify_single_drop_detection(const VerifierSpec& spec) {
    for (int s = 0; s < spec.k; ++s) {
        const TaggedCircuit& sub = spec.subcircuits[static_cast<std::size_t>(s)];
        for (std::size_t drop = 0; drop < sub.size(); ++drop) {
            sim::StateVector st;
            for (int q = 0; q < sub.n_qubits(); ++q) st.add_qubit(static_cast<QubitLabel>(q));
            for (std::size_t i = 0; i < sub.size(); ++i)
                if (i != drop) st.apply(sub[i].gate);
            std::size_t idx = 0;
            for (int q = 0; q < sub.n_qubits(); ++q)
                if (spec.expected[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)])
                    idx |= std::size_t{1} << st.position(static_cast<QubitLabel>(q));
            if (std::norm(st.amplitudes()[idx]) > 1e-12) return false;
        }
    }
    return true;
}

std::pair<TaggedCircuit, std::vector<int>> interleave(const TaggedCircuit& original,
                                                      const VerifierSpec& spec, Rng& rng) {
    std::vector<circuit::TaggedGate> decoy;
    for (int s = 0; s < spec.k; ++s) {
        const QubitLabel off =
            static_cast<QubitLabel>(original.n_qubits() + s * spec.p_v);
        const TaggedCircuit& sub = spec.subcircuits[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < sub.size(); ++i) {
            circuit::TaggedGate tg = sub[i];
            for (QubitLabel& t : tg.gate.targets) t += off;
            decoy.push_back(std::move(tg));
        }
    }

    std::vector<int> order(original.size() + decoy.size(), 0);
    std::fill(order.begin() + static_cast<std::ptrdiff_t>(original.size()), order.end(), 1);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    TaggedCircuit combined(original.n_qubits() + spec.n_prime);
    std::vector<int> origin;
    origin.reserve(order.size());
    std::size_t io = 0, iv = 0;
    for (int side : order) {
        if (side == 0) {
            combined.add(original[io].gate, original[io].tag);
            ++io;
        } else {
            combined.add(decoy[iv].gate, decoy[iv].tag);
            ++iv;
        }
        origin.push_back(side);
    }
    return {std::move(combined), std::move(origin)};
}

DetectionReport run_interleaved(const TaggedCircuit& original, const VerifierSpec& spec,
                                const InterleaveConfig& cfg, Rng& rng) {
    if (!cfg.profile.can_swap_ports)
        throw VerificationUnsupported("profile cannot reroute wires between sends");
    if (cfg.protocol != protocol::ProtocolKind::P4 && cfg.profile.max_client_qubits < 2)
        throw VerificationUnsupported(
            "wire mixing needs the client to hold two qubits at once");
    if (cfg.shots < 1) throw BadArgument("verification needs at least one shot");

    auto [combined, origin] = interleave(original, spec, rng);

    DetectionReport rep;
    rep.shots = cfg.shots;
    const int n = original.n_qubits();
    Rng seeds = rng.split(0xad);
    for (int shot = 0; shot < cfg.shots; ++shot) {
        protocol::EngineConfig ec;
        ec.protocol = cfg.protocol;
        ec.profile = cfg.profile;
        ec.trap_density = cfg.trap_density;
        ec.measure_outputs = true;
        ec.behavior = cfg.behavior;
        ec.behavior.seed = seeds.bits();
        ec.gate_origin = origin;
        protocol::RunResult r =
            protocol::run_protocol(combined, ec, rng.split(1000 + static_cast<std::uint64_t>(shot)));
        if (shot == 0) {
            rep.instructed_original = r.summary.instr_original;
            rep.instructed_verifier = r.summary.instr_verifier;
        }
        bool mismatch = false;
        for (int s = 0; s < spec.k; ++s)
            for (int j = 0; j < spec.p_v; ++j) {
                const QubitLabel q = static_cast<QubitLabel>(n + s * spec.p_v + j);
                auto it = r.measured.find(q);
                if (it == r.measured.end() ||
                    it->second != spec.expected[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)])
                    mismatch = true;
            }
        rep.mismatched_shots += mismatch;
        std::vector<int> bits(static_cast<std::size_t>(n), 0);
        for (int q = 0; q < n; ++q) bits[static_cast<std::size_t>(q)] = r.measured.at(static_cast<QubitLabel>(q));
        rep.original_bits.push_back(std::move(bits));
    }
    rep.verdict = rep.mismatched_shots >= 1 ? Verdict::Dishonest : Verdict::Honest;

    using adversary::DropScope;
    using adversary::ServerBehavior;
    if (cfg.behavior.kind == ServerBehavior::Kind::DropRandomGate &&
        cfg.behavior.scope == DropScope::All) {
        rep.analytic_nondetect_log10 = nondetection_log10_gates(
            rep.instructed_original, rep.instructed_verifier, cfg.shots, cfg.behavior.drop_count);
        rep.analytic_nondetect = nondetection_probability_gates(
            rep.instructed_original, rep.instructed_verifier, cfg.shots, cfg.behavior.drop_count);
    } else if (cfg.behavior.kind == ServerBehavior::Kind::DropRandomGate &&
               cfg.behavior.scope == DropScope::VerifierOnly && rep.instructed_verifier > 0) {
        rep.analytic_nondetect = 0.0;
        rep.analytic_nondetect_log10 = -std::numeric_limits<double>::infinity();
    } else {
        // Honest servers and original-only tampering never touch a decoy.
        rep.analytic_nondetect = 1.0;
        rep.analytic_nondetect_log10 = 0.0;
    }
    return rep;
}

double nondetection_log10(int n, int nprime, int shots) {
    if (n < 1 || nprime < 0 || shots < 0)
        throw BadArgument("nondetection likelihood wants n >= 1, nprime >= 0, shots >= 0");
    return -static_cast<double>(shots) * std::log1p(static_cast<double>(nprime) / n) /
           std::numbers::ln10;
}

double nondetection_probability(int n, int nprime, int shots) {
    if (n < 1 || nprime < 0 || shots < 0)
        throw BadArgument("nondetection likelihood wants n >= 1, nprime >= 0, shots >= 0");
    return std::exp(-static_cast<double>(shots) * std::log1p(static_cast<double>(nprime) / n));
}

double nondetection_log10_gates(long orig_gates, long verifier_gates, int shots, int drops) {
    if (orig_gates < 0 || verifier_gates < 0 || shots < 0 || drops < 0)
        throw BadArgument("gate-count nondetection wants nonnegative arguments");
    const long total = orig_gates + verifier_gates;
    if (total == 0 || drops == 0) return 0.0;  // nothing droppable or dropped
    if (drops > orig_gates) return -std::numeric_limits<double>::infinity();
    double per_shot = 0.0;  // drops are distinct picks, so no replacement
    for (int i = 0; i < drops; ++i)
        per_shot += std::log10(static_cast<double>(orig_gates - i)) -
                    std::log10(static_cast<double>(total - i));
    return static_cast<double>(shots) * per_shot;
}

double nondetection_probability_gates(long orig_gates, long verifier_gates, int shots, int drops) {
    const double l = nondetection_log10_gates(orig_gates, verifier_gates, shots, drops);
    return std::isinf(l) ? 0.0 : std::pow(10.0, l);
}

std::string format_probability_log10(double log10_value) {
    if (std::isnan(log10_value) || log10_value == -std::numeric_limits<double>::infinity())
        return "0";
    if (log10_value >= 0.0) return "1";
    if (log10_value > -6.0) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.6g", std::pow(10.0, log10_value));
        return buf;
    }
    double e = std::floor(log10_value);
    double m = std::pow(10.0, log10_value - e);
    if (m >= 9.9995) {
        m /= 10.0;
        e += 1.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3ge%.0f", m, e);
    return buf;
}

std::string DetectionReport::to_json() const {
    nlohmann::json j;
    j["shots"] = shots;
    j["mismatched_shots"] = mismatched_shots;
    j["verdict"] = verdict_name(verdict);
    j["instructed_original"] = instructed_original;
    j["instructed_verifier"] = instructed_verifier;
    j["analytic_nondetect"] = analytic_nondetect;
    j["analytic_nondetect_log10"] =
        std::isinf(analytic_nondetect_log10) ? -1e9 : analytic_nondetect_log10;
    j["analytic_nondetect_str"] = format_probability_log10(analytic_nondetect_log10);
    j["original_bits"] = original_bits;
    return j.dump(2);
}

}  // namespace qdel::verify
