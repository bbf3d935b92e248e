#include <cmath>
#include <complex>
#include <cstdint>

#include "qdel/sim/kernels.hpp"

// OpenMP kernels. Pair-updating gates iterate a compressed range of
// 2^(n-1) (or 2^(n-2), 2^(n-3)) indices and expand each into the touched
// basis indices with mask arithmetic, so iterations never collide.

namespace qdel::sim::kernels::par {

namespace {

using idx_t = std::int64_t;

// Expands a compressed index by opening a hole at bit `pos`.
inline std::size_t insert_bit(std::size_t k, std::size_t low_mask, std::size_t high_mask) {
    return ((k & high_mask) << 1) | (k & low_mask);
}

}  // namespace

void apply_matrix1(std::span<Amplitude> amps, const std::array<Amplitude, 4>& m, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    const std::size_t low = bit - 1;
    const std::size_t high = ~low;
    const idx_t half = static_cast<idx_t>(amps.size() >> 1);
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_bit(static_cast<std::size_t>(k), low, high);
        const std::size_t i1 = i0 | bit;
        const Amplitude a0 = a[i0];
        const Amplitude a1 = a[i1];
        a[i0] = m[0] * a0 + m[1] * a1;
        a[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_diag1(std::span<Amplitude> amps, Amplitude phase0, Amplitude phase1, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) a[i] *= (static_cast<std::size_t>(i) & bit) ? phase1 : phase0;
}

void apply_x(std::span<Amplitude> amps, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    const std::size_t low = bit - 1;
    const std::size_t high = ~low;
    const idx_t half = static_cast<idx_t>(amps.size() >> 1);
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_bit(static_cast<std::size_t>(k), low, high);
        std::swap(a[i0], a[i0 | bit]);
    }
}

void apply_cnot(std::span<Amplitude> amps, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t low = tbit - 1;
    const std::size_t high = ~low;
    const idx_t half = static_cast<idx_t>(amps.size() >> 1);
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_bit(static_cast<std::size_t>(k), low, high);
        if (i0 & cbit) std::swap(a[i0], a[i0 | tbit]);
    }
}

void apply_cz(std::span<Amplitude> amps, int pos_a, int pos_b) {
    const std::size_t mask = (std::size_t{1} << pos_a) | (std::size_t{1} << pos_b);
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) {
        if ((static_cast<std::size_t>(i) & mask) == mask) a[i] = -a[i];
    }
}

void apply_swap(std::span<Amplitude> amps, int pos_a, int pos_b) {
    const std::size_t abit = std::size_t{1} << pos_a;
    const std::size_t bbit = std::size_t{1} << pos_b;
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        if ((u & abit) && !(u & bbit)) std::swap(a[u], a[(u ^ abit) | bbit]);
    }
}

void apply_rzz(std::span<Amplitude> amps, double angle, int pos_a, int pos_b) {
    const std::size_t abit = std::size_t{1} << pos_a;
    const std::size_t bbit = std::size_t{1} << pos_b;
    const Amplitude even = std::exp(Amplitude(0.0, -angle / 2.0));
    const Amplitude odd = std::exp(Amplitude(0.0, angle / 2.0));
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        const bool parity = static_cast<bool>(u & abit) != static_cast<bool>(u & bbit);
        a[i] *= parity ? odd : even;
    }
}

void apply_ccz(std::span<Amplitude> amps, int pos_a, int pos_b, int pos_c) {
    const std::size_t mask =
        (std::size_t{1} << pos_a) | (std::size_t{1} << pos_b) | (std::size_t{1} << pos_c);
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) {
        if ((static_cast<std::size_t>(i) & mask) == mask) a[i] = -a[i];
    }
}

void apply_ccx(std::span<Amplitude> amps, int control_a, int control_b, int target) {
    const std::size_t cmask = (std::size_t{1} << control_a) | (std::size_t{1} << control_b);
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t low = tbit - 1;
    const std::size_t high = ~low;
    const idx_t half = static_cast<idx_t>(amps.size() >> 1);
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_bit(static_cast<std::size_t>(k), low, high);
        if ((i0 & cmask) == cmask) std::swap(a[i0], a[i0 | tbit]);
    }
}

double prob_one(std::span<const Amplitude> amps, int pos) {
    const std::size_t bit = std::size_t{1} << pos;
    const idx_t n = static_cast<idx_t>(amps.size());
    const Amplitude* a = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p)
    for (idx_t i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) & bit) p += std::norm(a[i]);
    }
    return p;
}

void collapse(std::span<Amplitude> amps, int pos, int outcome, double keep_prob) {
    const std::size_t bit = std::size_t{1} << pos;
    const double scale = 1.0 / std::sqrt(keep_prob);
    const idx_t n = static_cast<idx_t>(amps.size());
    Amplitude* a = amps.data();
#pragma omp parallel for schedule(static)
    for (idx_t i = 0; i < n; ++i) {
        const bool one = static_cast<bool>(static_cast<std::size_t>(i) & bit);
        if (one == (outcome != 0))
            a[i] *= scale;
        else
            a[i] = 0.0;
    }
}

}  // namespace qdel::sim::kernels::par
