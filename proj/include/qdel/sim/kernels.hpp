#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "qdel/sim/gate.hpp"

namespace qdel::sim::kernels {

// Gate kernels over a 2^n amplitude array. Qubit positions are bit indices
// (position 0 = least significant bit of the basis index).
//
// Two implementations of the same contract:
//   serial::* — straightforward reference loops, kept as the test oracle.
//   par::*    — OpenMP loops over a compressed index range.
// Per-amplitude arithmetic is identical in both, so outputs of the unitary
// kernels agree bit for bit; only the reductions (prob_one) may differ by
// rounding order.

namespace serial {

void apply_matrix1(std::span<Amplitude> amps, const std::array<Amplitude, 4>& m, int pos);
void apply_diag1(std::span<Amplitude> amps, Amplitude phase0, Amplitude phase1, int pos);
void apply_x(std::span<Amplitude> amps, int pos);
void apply_cnot(std::span<Amplitude> amps, int control, int target);
void apply_cz(std::span<Amplitude> amps, int pos_a, int pos_b);
void apply_swap(std::span<Amplitude> amps, int pos_a, int pos_b);
void apply_rzz(std::span<Amplitude> amps, double angle, int pos_a, int pos_b);
void apply_ccz(std::span<Amplitude> amps, int pos_a, int pos_b, int pos_c);
void apply_ccx(std::span<Amplitude> amps, int control_a, int control_b, int target);
double prob_one(std::span<const Amplitude> amps, int pos);
void collapse(std::span<Amplitude> amps, int pos, int outcome, double keep_prob);

}  // namespace serial

namespace par {

void apply_matrix1(std::span<Amplitude> amps, const std::array<Amplitude, 4>& m, int pos);
void apply_diag1(std::span<Amplitude> amps, Amplitude phase0, Amplitude phase1, int pos);
void apply_x(std::span<Amplitude> amps, int pos);
void apply_cnot(std::span<Amplitude> amps, int control, int target);
void apply_cz(std::span<Amplitude> amps, int pos_a, int pos_b);
void apply_swap(std::span<Amplitude> amps, int pos_a, int pos_b);
void apply_rzz(std::span<Amplitude> amps, double angle, int pos_a, int pos_b);
void apply_ccz(std::span<Amplitude> amps, int pos_a, int pos_b, int pos_c);
void apply_ccx(std::span<Amplitude> amps, int control_a, int control_b, int target);
double prob_one(std::span<const Amplitude> amps, int pos);
void collapse(std::span<Amplitude> amps, int pos, int outcome, double keep_prob);

}  // namespace par

}  // namespace qdel::sim::kernels
