#include <cmath>
#include <complex>

#include "qdel/sim/kernels.hpp"

// Reference kernels. Written for clarity, not speed: plain index loops with a
// bit test per iteration. The parallel kernels are checked against these.

namespace qdel::sim::kernels::serial {

void apply_matrix1(std::span<Amplitude> amps, const std::array<Amplitude, 4>& m, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_diag1(std::span<Amplitude> amps, Amplitude phase0, Amplitude phase1, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? phase1 : phase0;
}

void apply_x(std::span<Amplitude> amps, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        std::swap(amps[i], amps[i | bit]);
    }
}

void apply_cnot(std::span<Amplitude> amps, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
    }
}

void apply_cz(std::span<Amplitude> amps, int pos_a, int pos_b) {
    const std::size_t mask = (std::size_t{1} << pos_a) | (std::size_t{1} << pos_b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
}

void apply_swap(std::span<Amplitude> amps, int pos_a, int pos_b) {
    const std::size_t abit = std::size_t{1} << pos_a;
    const std::size_t bbit = std::size_t{1} << pos_b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & abit) && !(i & bbit)) std::swap(amps[i], amps[(i ^ abit) | bbit]);
    }
}

void apply_rzz(std::span<Amplitude> amps, double angle, int pos_a, int pos_b) {
    const std::size_t abit = std::size_t{1} << pos_a;
    const std::size_t bbit = std::size_t{1} << pos_b;
    const Amplitude even = std::exp(Amplitude(0.0, -angle / 2.0));
    const Amplitude odd = std::exp(Amplitude(0.0, angle / 2.0));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool parity = static_cast<bool>(i & abit) != static_cast<bool>(i & bbit);
        amps[i] *= parity ? odd : even;
    }
}

void apply_ccz(std::span<Amplitude> amps, int pos_a, int pos_b, int pos_c) {
    const std::size_t mask =
        (std::size_t{1} << pos_a) | (std::size_t{1} << pos_b) | (std::size_t{1} << pos_c);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
}

void apply_ccx(std::span<Amplitude> amps, int control_a, int control_b, int target) {
    const std::size_t cmask = (std::size_t{1} << control_a) | (std::size_t{1} << control_b);
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) == cmask && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
    }
}

double prob_one(std::span<const Amplitude> amps, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    double p = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) p += std::norm(amps[i]);
    }
    return p;
}

void collapse(std::span<Amplitude> amps, int pos, int outcome, double keep_prob) {
    const std::size_t bit = std::size_t{1} << pos;
    const double scale = 1.0 / std::sqrt(keep_prob);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool one = static_cast<bool>(i & bit);
        if (one == (outcome != 0))
            amps[i] *= scale;
        else
            amps[i] = 0.0;
    }
}

}  // namespace qdel::sim::kernels::serial
