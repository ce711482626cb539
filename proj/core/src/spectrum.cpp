#include "ringop/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ringop {

namespace {

constexpr double kHermitianTol = 1e-12;

double max_asymmetry(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Rotate each column so its largest-magnitude component is real positive.
// This pins the arbitrary eigenvector phase and makes output deterministic.
void canonicalize_columns(Eigen::MatrixXcd& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index pivot = 0;
        vectors.col(c).cwiseAbs().maxCoeff(&pivot);
        const std::complex<double> lead = vectors(pivot, c);
        if (std::abs(lead) > 0.0) {
            vectors.col(c) *= std::polar(1.0, -std::arg(lead));
        }
    }
}

SpectrumResult solve(const Eigen::MatrixXcd& m) {
    const double asym = max_asymmetry(m);
    if (asym > kHermitianTol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: max |M - adjoint(M)| = " << asym
            << " exceeds " << kHermitianTol;
        throw std::invalid_argument(msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigensolver did not converge; off-diagonal norm "
            << (m - Eigen::MatrixXcd(m.diagonal().asDiagonal())).norm();
        throw std::runtime_error(msg.str());
    }

    Eigen::VectorXd values = solver.eigenvalues(); // ascending
    Eigen::MatrixXcd vectors = solver.eigenvectors();
    canonicalize_columns(vectors);

    // Ascending order with a deterministic tie-break on the phase of the
    // first eigenvector component.
    const auto n = static_cast<std::size_t>(values.size());
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         if (values(a) != values(b)) return values(a) < values(b);
                         return std::arg(vectors(0, a)) < std::arg(vectors(0, b));
                     });

    SpectrumResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors.assign(n, std::vector<std::complex<double>>(n));
    Eigen::MatrixXcd sorted_vectors(values.size(), values.size());
    for (std::size_t j = 0; j < n; ++j) {
        result.eigenvalues[j] = values(order[j]);
        sorted_vectors.col(static_cast<Eigen::Index>(j)) = vectors.col(order[j]);
        for (std::size_t i = 0; i < n; ++i) {
            result.eigenvectors[j][i] = vectors(static_cast<Eigen::Index>(i), order[j]);
        }
    }

    Eigen::VectorXd sorted_values =
        Eigen::Map<const Eigen::VectorXd>(result.eigenvalues.data(),
                                          static_cast<Eigen::Index>(n));
    result.residual = (m * sorted_vectors -
                       sorted_vectors * sorted_values.asDiagonal())
                          .cwiseAbs()
                          .maxCoeff();
    return result;
}

} // namespace

SpectrumResult hermitian_eigen(const std::vector<std::complex<double>>& row_major,
                               int n) {
    if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
    if (row_major.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("matrix entry count does not match dimension");
    }
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = row_major[static_cast<std::size_t>(r) * n + c];
    return solve(m);
}

SpectrumResult hermitian_eigen(const OperatorMatrix& op) {
    return hermitian_eigen(op.entries(), op.n());
}

std::vector<double> analytic_twisted_spectrum(const RingGrid& grid,
                                              double gauge_k, double twist_phi) {
    const int n = grid.n_points();
    const double phi = wrap_phase(twist_phi);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const double angle = (2.0 * std::numbers::pi * m + phi) / n;
        values[static_cast<std::size_t>(m)] = std::sin(angle) / grid.dx() - gauge_k;
    }
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace ringop
