#include "ringop/sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringop/operator_matrix.hpp"
#include "ringop/spectrum.hpp"
#include "ringop/superposition.hpp"

namespace ringop {

SweepTable phi_sweep(const RingGrid& grid, double gauge_k, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");

    SweepTable table;
    table.n_points = grid.n_points();
    table.gauge_k = gauge_k;
    table.phi_values.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        // Pin the endpoints so the 0 and pi rows are exact.
        double phi = i == 0            ? 0.0
                     : i == steps - 1  ? std::numbers::pi
                                       : i * (std::numbers::pi / (steps - 1));
        table.phi_values.push_back(phi);
    }

    table.rows.reserve(static_cast<std::size_t>(steps) * 2);
    for (double phi : table.phi_values) {
        for (int sign : {-1, +1}) {
            SweepRow row;
            row.phi = phi;
            row.branch_sign = sign;
            row.eigenvalues =
                hermitian_eigen(build_twisted_operator(grid, gauge_k, sign * phi))
                    .eigenvalues;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::vector<ConvergenceRow> convergence_study(
    double q, const std::vector<double>& gauge_ks,
    const std::vector<int>& n_points_list) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(gauge_ks.size() * n_points_list.size());
    for (double k : gauge_ks) {
        const double phi = twist_from_state(q, k);
        for (int n : n_points_list) {
            const RingGrid grid(n);
            const auto spectrum =
                hermitian_eigen(build_twisted_operator(grid, k, phi)).eigenvalues;

            // Closest eigenvalue to q; on a tie the smaller one wins because
            // the list is ascending and only strict improvements move it.
            double best = spectrum.front();
            for (double value : spectrum) {
                if (std::abs(value - q) < std::abs(best - q)) best = value;
            }

            rows.push_back({n, k, grid.dx(), std::abs(best - q)});
        }
    }
    return rows;
}

std::vector<BandRow> band_table(int n_min, int n_max, int q_samples) {
    if (q_samples < 2) throw std::invalid_argument("band table needs at least 2 q samples");
    if (n_min > n_max) throw std::invalid_argument("empty band index range");

    std::vector<BandRow> rows;
    rows.reserve(static_cast<std::size_t>(q_samples) *
                 static_cast<std::size_t>(n_max - n_min + 1));
    for (int i = 0; i < q_samples; ++i) {
        const double q = -0.5 + static_cast<double>(i) / (q_samples - 1);
        for (int n = n_min; n <= n_max; ++n) {
            rows.push_back({q, n, band_energy(q, n)});
        }
    }
    return rows;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two points");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) {
            throw std::invalid_argument("slope fit needs positive coordinates");
        }
        const double lx = std::log(x);
        const double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace ringop
