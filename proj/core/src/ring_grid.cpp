#include "ringop/ring_grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace ringop {

RingGrid::RingGrid(int n_points) : n_(n_points) {
    if (n_points < 3) {
        throw std::invalid_argument(
            "ring grid needs at least 3 points, got " + std::to_string(n_points) +
            " (the central-difference stencil is degenerate below 3)");
    }
    dx_ = 2.0 * std::numbers::pi / n_points;
    x_.resize(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) {
        x_[static_cast<std::size_t>(j)] = -std::numbers::pi + j * dx_;
    }
}

} // namespace ringop
