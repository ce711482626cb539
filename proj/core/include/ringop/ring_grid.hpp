#pragma once

#include <vector>

namespace ringop {

/// Uniform discretization of the ring coordinate x in [-pi, pi).
///
/// The ring is cut into n_points segments of width dx = 2*pi/n_points with
/// sample points x_j = -pi + j*dx.  The seam (the coordinate discontinuity of
/// the ring) sits between the last index and index 0.  The half-open interval
/// avoids double-counting the seam point.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class RingGrid {
public:
    /// Throws std::invalid_argument if n_points < 3: the central-difference
    /// stencil needs distinct left and right neighbors, so a 1- or 2-point
    /// ring is degenerate.
    explicit RingGrid(int n_points);

    int n_points() const noexcept { return n_; }
    double dx() const noexcept { return dx_; }
    double x(int j) const { return x_.at(static_cast<std::size_t>(j)); }
    const std::vector<double>& x_values() const noexcept { return x_; }

private:
    int n_;
    double dx_;
    std::vector<double> x_;
};

inline RingGrid make_ring_grid(int n_points) { return RingGrid(n_points); }

} // namespace ringop
