#include "qdel/sim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qdel/errors.hpp"
#include "qdel/sim/kernels.hpp"

namespace qdel::sim {

namespace {

// Below this many amplitudes the OpenMP fork/join costs more than the loop.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

constexpr int kMaxQubits = 24;

}  // namespace

bool StateVector::use_parallel() const {
    switch (policy_) {
        case ExecPolicy::Serial: return false;
        case ExecPolicy::Parallel: return true;
        case ExecPolicy::Auto: return amps_.size() >= kParallelThreshold;
    }
    return false;
}

int StateVector::position(QubitLabel label) const {
    auto it = pos_.find(label);
    if (it == pos_.end())
        throw UnknownQubit("no qubit labeled " + std::to_string(label));
    return it->second;
}

void StateVector::add_qubit(QubitLabel label) {
    if (pos_.count(label))
        throw BadArgument("qubit label " + std::to_string(label) + " already present");
    if (n_qubits() >= kMaxQubits)
        throw TooLargeToSimulate("statevector limited to " + std::to_string(kMaxQubits) +
                                 " qubits");
    pos_[label] = n_qubits();
    labels_.push_back(label);
    amps_.resize(amps_.size() * 2, Amplitude(0.0, 0.0));  // new bit = 0 half kept
}

void StateVector::discard_qubit(QubitLabel label, int value) {
    const int p = position(label);
    const std::size_t bit = std::size_t{1} << p;
    const std::size_t low = bit - 1;
    const std::size_t high = ~low;

    double dropped = 0.0;
    std::vector<Amplitude> next(amps_.size() / 2);
    for (std::size_t k = 0; k < next.size(); ++k) {
        const std::size_t base = ((k & high) << 1) | (k & low);
        next[k] = amps_[base | (value ? bit : 0)];
        dropped += std::norm(amps_[base | (value ? 0 : bit)]);
    }
    if (dropped > 1e-9)
        throw BadArgument("discarding qubit " + std::to_string(label) +
                          " would drop weight " + std::to_string(dropped));

    double nrm = 0.0;
    for (const auto& a : next) nrm += std::norm(a);
    const double scale = 1.0 / std::sqrt(nrm);
    for (auto& a : next) a *= scale;

    amps_ = std::move(next);
    labels_.erase(labels_.begin() + p);
    pos_.clear();
    for (int i = 0; i < n_qubits(); ++i) pos_[labels_[i]] = i;
}

void StateVector::apply(const GateInstance& gate) {
    validate_gate(gate);
    std::vector<int> p(gate.targets.size());
    for (std::size_t i = 0; i < gate.targets.size(); ++i) p[i] = position(gate.targets[i]);

    const bool par = use_parallel();
    std::span<Amplitude> a{amps_};
    using namespace kernels;

    auto matrix1 = [&](const std::array<Amplitude, 4>& m) {
        par ? par::apply_matrix1(a, m, p[0]) : serial::apply_matrix1(a, m, p[0]);
    };
    auto diag1 = [&](Amplitude f0, Amplitude f1) {
        par ? par::apply_diag1(a, f0, f1, p[0]) : serial::apply_diag1(a, f0, f1, p[0]);
    };

    const Amplitude i_unit(0.0, 1.0);
    switch (gate.kind) {
        case GateKind::X:
            par ? par::apply_x(a, p[0]) : serial::apply_x(a, p[0]);
            break;
        case GateKind::Z: diag1(1.0, -1.0); break;
        case GateKind::S: diag1(1.0, i_unit); break;
        case GateKind::T: diag1(1.0, std::exp(i_unit * (std::acos(-1.0) / 4.0))); break;
        case GateKind::RZ: {
            const double t = gate.params[0] / 2.0;
            diag1(std::exp(-i_unit * t), std::exp(i_unit * t));
            break;
        }
        case GateKind::H:
        case GateKind::Y:
        case GateKind::RX:
        case GateKind::RY:
            matrix1(single_qubit_matrix(gate.kind, gate.params.empty() ? 0.0 : gate.params[0]));
            break;
        case GateKind::CNOT:
            par ? par::apply_cnot(a, p[0], p[1]) : serial::apply_cnot(a, p[0], p[1]);
            break;
        case GateKind::CZ:
            par ? par::apply_cz(a, p[0], p[1]) : serial::apply_cz(a, p[0], p[1]);
            break;
        case GateKind::SWAP:
            par ? par::apply_swap(a, p[0], p[1]) : serial::apply_swap(a, p[0], p[1]);
            break;
        case GateKind::RZZ:
            par ? par::apply_rzz(a, gate.params[0], p[0], p[1])
                : serial::apply_rzz(a, gate.params[0], p[0], p[1]);
            break;
        case GateKind::CCZ:
            par ? par::apply_ccz(a, p[0], p[1], p[2]) : serial::apply_ccz(a, p[0], p[1], p[2]);
            break;
        case GateKind::CCX:
            par ? par::apply_ccx(a, p[0], p[1], p[2]) : serial::apply_ccx(a, p[0], p[1], p[2]);
            break;
    }
}

double StateVector::prob_one(QubitLabel label) const {
    // Always the serial reduction: its summation order is fixed, so sampled
    // outcomes cannot depend on the thread count.
    return kernels::serial::prob_one(std::span<const Amplitude>{amps_}, position(label));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

MeasurementRecord StateVector::measure_z(QubitLabel label, Rng& rng) {
    const int p = position(label);
    const double p1 = prob_one(label);
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    const double keep = outcome ? p1 : 1.0 - p1;
    std::span<Amplitude> a{amps_};
    if (use_parallel())
        kernels::par::collapse(a, p, outcome, keep);
    else
        kernels::serial::collapse(a, p, outcome, keep);
    return {label, outcome, keep};
}

double fidelity_up_to_global_phase(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits())
        throw LabelMismatch("states have different qubit counts");
    std::set<QubitLabel> la(a.labels().begin(), a.labels().end());
    std::set<QubitLabel> lb(b.labels().begin(), b.labels().end());
    if (la != lb) throw LabelMismatch("states carry different qubit labels");

    // Bit p of an index in a's basis lands at bit b.position(a.labels()[p]).
    const int n = a.n_qubits();
    std::vector<int> map(n);
    for (int p = 0; p < n; ++p) map[p] = b.position(a.labels()[p]);

    Amplitude overlap(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::size_t j = 0;
        for (int p = 0; p < n; ++p)
            if (i & (std::size_t{1} << p)) j |= std::size_t{1} << map[p];
        overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[j];
    }
    return std::norm(overlap);
}

}  // namespace qdel::sim
