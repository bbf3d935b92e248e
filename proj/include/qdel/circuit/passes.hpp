#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qdel/circuit/tagged_circuit.hpp"
#include "qdel/random.hpp"

namespace qdel::circuit {

// RZZ(t) on (x,y) -> CNOT(x,y), RZ(t) on y, CNOT(x,y). The CNOT skeleton is
// public; the angle-bearing RZ is private.
TaggedCircuit decompose_rzz(const TaggedCircuit& circuit);

// n shares summing to theta (mod 2pi); the first n-1 are uniform on [0,2pi).
std::vector<double> split_angle(double theta, int n, Rng& rng);

struct TrapPair {
    int first_index;   // gate index in the rewritten circuit
    int second_index;  // always first_index + 1; a client request goes between
};

struct TrapPlan {
    std::vector<TrapPair> pairs;
    std::vector<int> origin_of;  // rewritten index -> original index, -1 for traps

    bool is_trap(int rewritten_index) const { return origin_of[rewritten_index] < 0; }
    bool marker_after(int rewritten_index) const;  // first half of some pair?
};

// Inserts self-canceling CNOT/CZ pairs after randomly chosen delegable gates
// (multi-qubit or structure-private ones). `density` is the expected number
// of trap pairs per such gate.
std::pair<TaggedCircuit, TrapPlan> insert_traps(const TaggedCircuit& circuit, double density,
                                                Rng& rng);

using Permutation = std::map<QubitLabel, QubitLabel>;

// Uniformly random permutation of the given labels (identity allowed).
Permutation plan_swap_shuffle(const std::vector<QubitLabel>& held, Rng& rng);
Permutation invert_permutation(const Permutation& p);

}  // namespace qdel::circuit
