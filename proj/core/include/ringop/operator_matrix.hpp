#pragma once

#include <complex>
#include <vector>

#include "ringop/ring_grid.hpp"

namespace ringop {

/// Reduce an angle into the canonical interval (-pi, pi].
/// A canonical representative makes equality tests on stored phases
/// well-defined; -0.0 is normalized to +0.0.
double wrap_phase(double phi);

/// Seam twist produced by a state of total phase winding (q + gauge_k):
/// returns 2*pi*(q + gauge_k) reduced into (-pi, pi].
///
/// The fractional part of the winding is taken before scaling by 2*pi, so an
/// exactly integer winding maps to exactly zero twist.
double twist_from_state(double q, double gauge_k);

/// Discretized momentum operator on the ring: an N x N complex Hermitian
/// matrix with next-neighbor central-difference stencil -i/(2 dx) above the
/// diagonal, +i/(2 dx) below, gauge shift -gauge_k on the diagonal, and seam
/// cells carrying the twist phase:
///
///   (0, N-1) = +i e^{-i phi} / (2 dx),   (N-1, 0) = -i e^{+i phi} / (2 dx).
///
/// The two seam cells are rotated in opposite directions, which keeps the
/// matrix exactly Hermitian; phi = 0 reduces to the plain periodic stencil.
/// Entries are stored row-major.  Immutable after construction.
class OperatorMatrix {
public:
    OperatorMatrix(RingGrid grid, double gauge_k, double twist_phi,
                   std::vector<std::complex<double>> entries);

    const RingGrid& grid() const noexcept { return grid_; }
    double gauge_k() const noexcept { return gauge_k_; }
    /// Twist phase, already wrapped into (-pi, pi].
    double twist_phi() const noexcept { return twist_phi_; }
    int n() const noexcept { return grid_.n_points(); }

    std::complex<double> operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * n() + c];
    }
    const std::vector<std::complex<double>>& entries() const noexcept {
        return entries_;
    }

private:
    RingGrid grid_;
    double gauge_k_;
    double twist_phi_;
    std::vector<std::complex<double>> entries_;
};

/// Momentum operator with plain periodic seam cells (twist zero).
OperatorMatrix build_linear_operator(const RingGrid& grid, double gauge_k);

/// Momentum operator with twisted seam cells.  Any real twist_phi is
/// accepted and wrapped into (-pi, pi] first.
OperatorMatrix build_twisted_operator(const RingGrid& grid, double gauge_k,
                                      double twist_phi);

} // namespace ringop
