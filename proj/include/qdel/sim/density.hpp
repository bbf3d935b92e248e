#pragma once

#include <vector>

#include "qdel/sim/gate.hpp"
#include "qdel/sim/state_vector.hpp"

namespace qdel::sim {

// Small dense density matrix, row-major, little-endian over `labels` (bit j
// of a row/column index belongs to labels[j]). Only ever a few qubits: it
// backs the privacy checks, not the simulation.
struct DensityMatrix {
    std::vector<QubitLabel> labels;
    std::vector<Amplitude> elems;  // dim x dim, row-major

    std::size_t dim() const { return labels.empty() ? 1 : std::size_t{1} << labels.size(); }
    Amplitude& at(std::size_t r, std::size_t c) { return elems[r * dim() + c]; }
    const Amplitude& at(std::size_t r, std::size_t c) const { return elems[r * dim() + c]; }

    Amplitude trace() const;
    double max_abs_diff(const DensityMatrix& other) const;  // entrywise, same label order

    DensityMatrix& operator+=(const DensityMatrix& other);
    DensityMatrix& operator*=(double s);
};

DensityMatrix zero_density(std::vector<QubitLabel> labels);

// Partial trace of |psi><psi| keeping `keep` (result ordered as given).
DensityMatrix reduced_density_matrix(const StateVector& state, std::vector<QubitLabel> keep);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi, ascending. Used to
// check positive semidefiniteness of tiny density matrices.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m);

}  // namespace qdel::sim
