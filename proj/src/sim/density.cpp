#include "qdel/sim/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "qdel/errors.hpp"

namespace qdel::sim {

namespace {

std::size_t scatter(std::size_t compact, const std::vector<int>& positions) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < positions.size(); ++j)
        if (compact & (std::size_t{1} << j)) out |= std::size_t{1} << positions[j];
    return out;
}

}  // namespace

Amplitude DensityMatrix::trace() const {
    Amplitude t(0.0, 0.0);
    for (std::size_t r = 0; r < dim(); ++r) t += at(r, r);
    return t;
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        worst = std::max(worst, std::abs(elems[i] - other.elems[i]));
    return worst;
}

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& other) {
    for (std::size_t i = 0; i < elems.size(); ++i) elems[i] += other.elems[i];
    return *this;
}

DensityMatrix& DensityMatrix::operator*=(double s) {
    for (auto& e : elems) e *= s;
    return *this;
}

DensityMatrix zero_density(std::vector<QubitLabel> labels) {
    DensityMatrix m;
    m.labels = std::move(labels);
    m.elems.assign(m.dim() * m.dim(), Amplitude(0.0, 0.0));
    return m;
}

DensityMatrix reduced_density_matrix(const StateVector& state, std::vector<QubitLabel> keep) {
    std::vector<int> kpos(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) kpos[j] = state.position(keep[j]);

    std::vector<int> epos;
    for (int p = 0; p < state.n_qubits(); ++p)
        if (std::find(kpos.begin(), kpos.end(), p) == kpos.end()) epos.push_back(p);

    DensityMatrix rho = zero_density(std::move(keep));
    const std::size_t kd = rho.dim();
    const std::size_t ed = std::size_t{1} << epos.size();
    const auto& amps = state.amplitudes();
    for (std::size_t r = 0; r < kd; ++r) {
        const std::size_t rbits = scatter(r, kpos);
        for (std::size_t c = 0; c < kd; ++c) {
            const std::size_t cbits = scatter(c, kpos);
            Amplitude sum(0.0, 0.0);
            for (std::size_t e = 0; e < ed; ++e) {
                const std::size_t ebits = scatter(e, epos);
                sum += amps[rbits | ebits] * std::conj(amps[cbits | ebits]);
            }
            rho.at(r, c) = sum;
        }
    }
    return rho;
}

// Hermitian H = X + iY maps to the real symmetric [[X, -Y], [Y, X]], whose
// spectrum is H's with every eigenvalue doubled. Plain real Jacobi then
// suffices; we return every other sorted value.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& m) {
    const std::size_t d = m.dim();
    const std::size_t n = 2 * d;
    std::vector<double> a(n * n);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const double x = m.at(r, c).real();
            const double y = m.at(r, c).imag();
            a[r * n + c] = x;
            a[(r + d) * n + (c + d)] = x;
            a[r * n + (c + d)] = -y;
            a[(r + d) * n + c] = y;
        }
    }

    auto off = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) s += a[r * n + c] * a[r * n + c];
        return s;
    };

    for (int sweep = 0; sweep < 100 && off() > 1e-26; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> diag(n);
    for (std::size_t r = 0; r < n; ++r) diag[r] = a[r * n + r];
    std::sort(diag.begin(), diag.end());
    std::vector<double> eig(d);
    for (std::size_t j = 0; j < d; ++j) eig[j] = diag[2 * j];
    return eig;
}

}  // namespace qdel::sim
