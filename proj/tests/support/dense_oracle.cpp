#include "support/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

using qdel::circuit::PrivacyTag;
using qdel::circuit::TaggedCircuit;
using qdel::sim::GateInstance;
using qdel::sim::GateKind;
using qdel::sim::QubitLabel;

Mat Mat::identity(std::size_t d) {
    Mat m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat mul(const Mat& x, const Mat& y) {
    Mat r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k) {
            const Amp v = x.at(i, k);
            if (v == Amp(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Mat dagger(const Mat& m) {
    Mat r(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) r.at(j, i) = std::conj(m.at(i, j));
    return r;
}

std::vector<Amp> apply(const Mat& m, const std::vector<Amp>& v) {
    std::vector<Amp> r(m.dim, Amp(0.0, 0.0));
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

double max_abs_diff(const Mat& x, const Mat& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

namespace {

// Phase that best aligns y to x, read off the largest entry of y.
Amp alignment_phase(const std::vector<Amp>& x, const std::vector<Amp>& y) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (std::abs(y[i]) > std::abs(y[best])) best = i;
    if (std::abs(y[best]) < 1e-14 || std::abs(x[best]) < 1e-14) return Amp(1.0, 0.0);
    Amp ph = x[best] / y[best];
    return ph / std::abs(ph);
}

}  // namespace

double max_abs_diff_up_to_phase(const std::vector<Amp>& x, const std::vector<Amp>& y) {
    const Amp ph = alignment_phase(x, y);
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - ph * y[i]));
    return d;
}

double max_abs_diff_up_to_phase(const Mat& x, const Mat& y) {
    return max_abs_diff_up_to_phase(x.a, y.a);
}

namespace {

// 2^k x 2^k matrix of one gate over its own targets, local bit j = target j.
// Spelled out from the standard basis-state definitions.
Mat local_matrix(const GateInstance& g) {
    const Amp i(0.0, 1.0);
    const double is2 = 1.0 / std::sqrt(2.0);
    const double th = g.params.empty() ? 0.0 : g.params[0];
    const double c = std::cos(th / 2.0), s = std::sin(th / 2.0);

    auto m1 = [](Amp a00, Amp a01, Amp a10, Amp a11) {
        Mat m(2);
        m.at(0, 0) = a00;
        m.at(0, 1) = a01;
        m.at(1, 0) = a10;
        m.at(1, 1) = a11;
        return m;
    };

    switch (g.kind) {
        case GateKind::H: return m1(is2, is2, is2, -is2);
        case GateKind::X: return m1(0, 1, 1, 0);
        case GateKind::Y: return m1(0, -i, i, 0);
        case GateKind::Z: return m1(1, 0, 0, -1);
        case GateKind::S: return m1(1, 0, 0, i);
        case GateKind::T: return m1(1, 0, 0, std::exp(i * (std::acos(-1.0) / 4.0)));
        case GateKind::RX: return m1(c, -i * s, -i * s, c);
        case GateKind::RY: return m1(c, -s, s, c);
        case GateKind::RZ: return m1(std::exp(-i * (th / 2)), 0, 0, std::exp(i * (th / 2)));
        case GateKind::CNOT: {
            Mat m(4);  // flips bit 1 when bit 0 (the control) is set
            for (std::size_t b = 0; b < 4; ++b) m.at((b & 1) ? b ^ 2 : b, b) = 1.0;
            return m;
        }
        case GateKind::CZ: {
            Mat m = Mat::identity(4);
            m.at(3, 3) = -1.0;
            return m;
        }
        case GateKind::SWAP: {
            Mat m(4);
            for (std::size_t b = 0; b < 4; ++b)
                m.at(((b & 1) << 1) | ((b >> 1) & 1), b) = 1.0;
            return m;
        }
        case GateKind::RZZ: {
            Mat m(4);  // phase by the parity of the two bits
            for (std::size_t b = 0; b < 4; ++b) {
                const bool odd = ((b & 1) != 0) != ((b & 2) != 0);
                m.at(b, b) = std::exp(i * (odd ? th / 2 : -th / 2));
            }
            return m;
        }
        case GateKind::CCZ: {
            Mat m = Mat::identity(8);
            m.at(7, 7) = -1.0;
            return m;
        }
        case GateKind::CCX: {
            Mat m(8);  // flips bit 2 when bits 0 and 1 are both set
            for (std::size_t b = 0; b < 8; ++b) m.at((b & 3) == 3 ? b ^ 4 : b, b) = 1.0;
            return m;
        }
    }
    throw std::logic_error("unhandled gate kind in oracle");
}

}  // namespace

Mat gate_unitary(const GateInstance& g, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const Mat local = local_matrix(g);
    const int k = static_cast<int>(g.targets.size());

    Mat u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t lc = 0;
        std::size_t base = col;
        for (int j = 0; j < k; ++j) {
            const std::size_t bit = std::size_t{1} << g.targets[static_cast<std::size_t>(j)];
            if (col & bit) lc |= std::size_t{1} << j;
            base &= ~bit;
        }
        for (std::size_t lr = 0; lr < local.dim; ++lr) {
            const Amp v = local.at(lr, lc);
            if (v == Amp(0.0, 0.0)) continue;
            std::size_t row = base;
            for (int j = 0; j < k; ++j)
                if (lr & (std::size_t{1} << j))
                    row |= std::size_t{1} << g.targets[static_cast<std::size_t>(j)];
            u.at(row, col) = v;
        }
    }
    return u;
}

Mat circuit_unitary(const std::vector<GateInstance>& gates, int n) {
    Mat u = Mat::identity(std::size_t{1} << n);
    for (const auto& g : gates) u = mul(gate_unitary(g, n), u);
    return u;
}

Mat circuit_unitary(const TaggedCircuit& c) {
    std::vector<GateInstance> gs;
    for (std::size_t i = 0; i < c.size(); ++i) gs.push_back(c[i].gate);
    return circuit_unitary(gs, c.n_qubits());
}

std::vector<Amp> aligned_amplitudes(const qdel::sim::StateVector& s) {
    std::vector<QubitLabel> order = s.labels();
    std::sort(order.begin(), order.end());
    const auto& amps = s.amplitudes();
    std::vector<Amp> out(amps.size());
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t to = 0;
        for (std::size_t j = 0; j < order.size(); ++j)
            if (idx & (std::size_t{1} << s.position(order[j]))) to |= std::size_t{1} << j;
        out[to] = amps[idx];
    }
    return out;
}

Mat density_of(const std::vector<Amp>& v) {
    Mat rho(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) rho.at(r, c) = v[r] * std::conj(v[c]);
    return rho;
}

Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n) {
    const std::size_t kd = std::size_t{1} << keep.size();
    std::vector<int> env;
    for (int b = 0; b < n; ++b)
        if (std::find(keep.begin(), keep.end(), b) == keep.end()) env.push_back(b);
    const std::size_t ed = std::size_t{1} << env.size();

    auto assemble = [&](std::size_t kept, std::size_t e) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (kept & (std::size_t{1} << j)) idx |= std::size_t{1} << keep[j];
        for (std::size_t j = 0; j < env.size(); ++j)
            if (e & (std::size_t{1} << j)) idx |= std::size_t{1} << env[j];
        return idx;
    };

    Mat out(kd);
    for (std::size_t r = 0; r < kd; ++r)
        for (std::size_t c = 0; c < kd; ++c)
            for (std::size_t e = 0; e < ed; ++e)
                out.at(r, c) += rho.at(assemble(r, e), assemble(c, e));
    return out;
}

TaggedCircuit random_tagged_circuit(int n, int gates, bool allow_three_qubit, qdel::Rng& rng) {
    TaggedCircuit c(n);
    auto q = [&](QubitLabel except = 1000, QubitLabel except2 = 1000) {
        while (true) {
            auto v = static_cast<QubitLabel>(rng.below(static_cast<std::uint64_t>(n)));
            if (v != except && v != except2) return v;
        }
    };
    for (int i = 0; i < gates; ++i) {
        // Picks above 8 need a second (or third) distinct qubit.
        const std::uint64_t choices = n < 2 ? 9 : allow_three_qubit && n >= 3 ? 14 : 12;
        const int pick = static_cast<int>(rng.below(choices));
        switch (pick) {
            case 0: c.add(qdel::sim::make_gate(GateKind::X, {q()}), PrivacyTag::PublicOp); break;
            case 1: c.add(qdel::sim::make_gate(GateKind::Z, {q()}), PrivacyTag::PublicOp); break;
            case 2: c.add(qdel::sim::make_gate(GateKind::H, {q()}), PrivacyTag::PublicOp); break;
            case 3: c.add(qdel::sim::make_gate(GateKind::S, {q()}), PrivacyTag::PublicOp); break;
            case 4: c.add(qdel::sim::make_gate(GateKind::T, {q()}), PrivacyTag::PublicOp); break;
            case 5:
                c.add(qdel::sim::make_gate(GateKind::X, {q()}), PrivacyTag::PrivateStructure);
                break;
            case 6:
            case 7:
            case 8: {
                const auto kind = pick == 6 ? GateKind::RZ : pick == 7 ? GateKind::RX : GateKind::RY;
                c.add(qdel::sim::make_gate(kind, {q()}, {rng.uniform(0.0, 6.28)}),
                      PrivacyTag::PrivateAngle);
                break;
            }
            case 9: {
                const QubitLabel a = q(), b = q(a);
                c.add(qdel::sim::make_gate(rng.coin() ? GateKind::CNOT : GateKind::CZ, {a, b}),
                      PrivacyTag::PublicOp);
                break;
            }
            case 10: {
                const QubitLabel a = q(), b = q(a);
                c.add(qdel::sim::make_gate(GateKind::SWAP, {a, b}), PrivacyTag::PublicOp);
                break;
            }
            case 11: {
                const QubitLabel a = q(), b = q(a);
                c.add(qdel::sim::make_gate(GateKind::RZZ, {a, b}, {rng.uniform(0.0, 6.28)}),
                      PrivacyTag::PrivateAngle);
                break;
            }
            default: {
                const QubitLabel a = q(), b = q(a), d = q(a, b);
                c.add(qdel::sim::make_gate(pick == 12 ? GateKind::CCZ : GateKind::CCX, {a, b, d}),
                      rng.coin() ? PrivacyTag::PublicOp : PrivacyTag::PrivateStructure);
                break;
            }
        }
    }
    return c;
}

}  // namespace oracle
