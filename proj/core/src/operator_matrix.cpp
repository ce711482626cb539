#include "ringop/operator_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringop {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double wrap_phase(double phi) {
    double w = std::remainder(phi, kTwoPi); // lands in [-pi, pi]
    if (w <= -kPi) w += kTwoPi;             // move the -pi endpoint to +pi
    return w == 0.0 ? 0.0 : w;
}

double twist_from_state(double q, double gauge_k) {
    const double winding = q + gauge_k;
    // Reduce the winding before scaling by 2*pi; the subtraction is exact,
    // so integer windings give a twist of exactly zero.
    double frac = winding - std::round(winding);
    if (frac <= -0.5) frac += 1.0;
    const double phi = kTwoPi * frac;
    return phi == 0.0 ? 0.0 : phi;
}

OperatorMatrix::OperatorMatrix(RingGrid grid, double gauge_k, double twist_phi,
                               std::vector<std::complex<double>> entries)
    : grid_(std::move(grid)),
      gauge_k_(gauge_k),
      twist_phi_(wrap_phase(twist_phi)),
      entries_(std::move(entries)) {
    const auto n = static_cast<std::size_t>(grid_.n_points());
    if (entries_.size() != n * n) {
        throw std::invalid_argument("operator matrix entry count does not match grid");
    }
}

OperatorMatrix build_twisted_operator(const RingGrid& grid, double gauge_k,
                                      double twist_phi) {
    const int n = grid.n_points();
    const double phi = wrap_phase(twist_phi);
    const double scale = 1.0 / (2.0 * grid.dx());

    std::vector<std::complex<double>> m(static_cast<std::size_t>(n) * n);
    auto at = [&](int r, int c) -> std::complex<double>& {
        return m[static_cast<std::size_t>(r) * n + c];
    };

    // Next-neighbor stencil; every lower cell mirrors its upper partner so
    // Hermiticity holds exactly, not merely to rounding.
    const std::complex<double> upper{0.0, -scale}; // -i/(2 dx)
    for (int r = 0; r + 1 < n; ++r) {
        at(r, r + 1) = upper;
        at(r + 1, r) = std::conj(upper);
    }

    // Seam cells, rotated in opposite directions by the twist phase.
    const std::complex<double> seam =
        std::complex<double>{0.0, scale} * std::polar(1.0, -phi);
    at(0, n - 1) = seam;
    at(n - 1, 0) = std::conj(seam);

    for (int r = 0; r < n; ++r) at(r, r) = std::complex<double>{-gauge_k, 0.0};

    return OperatorMatrix(grid, gauge_k, phi, std::move(m));
}

OperatorMatrix build_linear_operator(const RingGrid& grid, double gauge_k) {
    return build_twisted_operator(grid, gauge_k, 0.0);
}

} // namespace ringop
