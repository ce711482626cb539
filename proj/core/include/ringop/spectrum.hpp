#pragma once

#include <complex>
#include <vector>

#include "ringop/operator_matrix.hpp"
#include "ringop/ring_grid.hpp"

namespace ringop {

/// Full spectrum of a complex Hermitian matrix.
///
/// eigenvalues are sorted ascending; eigenvectors[j] is the unit-norm
/// eigenvector paired with eigenvalues[j], canonicalized so that the
/// largest-magnitude component is real and positive.  residual is the
/// max-norm of M v - lambda v over all pairs.
struct SpectrumResult {
    std::vector<double> eigenvalues;
    std::vector<std::vector<std::complex<double>>> eigenvectors;
    double residual = 0.0;
};

/// Diagonalize a complex Hermitian matrix (row-major, n x n).
///
/// The input must be Hermitian within 1e-12 entrywise, otherwise a
/// std::invalid_argument reporting the largest asymmetry is thrown.
/// Output is deterministic for identical input; degenerate eigenvalues are
/// ordered by the phase of the first eigenvector component.
SpectrumResult hermitian_eigen(const std::vector<std::complex<double>>& row_major,
                               int n);
SpectrumResult hermitian_eigen(const OperatorMatrix& op);

/// Closed-form spectrum of the twisted ring momentum operator:
///
///   { sin((2 pi m + phi)/N) / dx - gauge_k : m = 0..N-1 },  sorted ascending.
///
/// This is the plane-wave diagonalization of the twisted circulant stencil
/// and serves as the independent oracle for hermitian_eigen.
std::vector<double> analytic_twisted_spectrum(const RingGrid& grid,
                                              double gauge_k, double twist_phi);

} // namespace ringop
