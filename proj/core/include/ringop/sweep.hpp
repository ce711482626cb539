#pragma once

#include <utility>
#include <vector>

#include "ringop/ring_grid.hpp"

namespace ringop {

/// One diagonalization of the sweep: the sorted spectrum of the operator
/// twisted by branch_sign * phi.
struct SweepRow {
    double phi = 0.0;    // magnitude of the twist, on the [0, pi] grid
    int branch_sign = 1; // +1 or -1
    std::vector<double> eigenvalues;
};

/// Eigenvalues as a function of the seam twist magnitude.  For each phi both
/// twists +phi and -phi are solved so that a plot against |phi| shows the
/// two branches every level splits into.  Rows are ordered by (phi, sign).
struct SweepTable {
    std::vector<double> phi_values; // uniform grid on [0, pi]
    std::vector<SweepRow> rows;
    int n_points = 0;
    double gauge_k = 0.0;
};

/// Sweep the twist over `steps` uniform values on [0, pi] (endpoints
/// included) and diagonalize both twist signs at every step.
/// Throws std::invalid_argument if steps < 2.
SweepTable phi_sweep(const RingGrid& grid, double gauge_k, int steps);

struct ConvergenceRow {
    int n_points = 0;
    double gauge_k = 0.0;
    double dx = 0.0;
    double error = 0.0; // |closest eigenvalue - q|
};

/// Grid-refinement study of gauge invariance in the discretized model: for
/// each (N, k) build the operator twisted by twist_from_state(q, k), take
/// the eigenvalue closest to q (ties resolved toward the smaller one) and
/// record the absolute error.  The error falls off at second order in dx
/// for every gauge, restoring the gauge-independent eigenvalue q in the
/// continuum limit.
std::vector<ConvergenceRow> convergence_study(
    double q, const std::vector<double>& gauge_ks,
    const std::vector<int>& n_points_list);

struct BandRow {
    double q = 0.0;
    int n = 0;
    double energy = 0.0;
};

/// Tabulate band_energy(q, n) for n in [n_min, n_max] and q_samples uniform
/// q values on [-0.5, 0.5].  Throws std::invalid_argument if q_samples < 2
/// or n_min > n_max.
std::vector<BandRow> band_table(int n_min, int n_max, int q_samples);

/// Least-squares slope of log(y) against log(x).  All points must have
/// positive coordinates and there must be at least two of them.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

} // namespace ringop
