#include "ringop/superposition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringop {

namespace {
constexpr double kPi = std::numbers::pi;

double sinc(double t) {
    if (t == 0.0) return 1.0;
    return std::sin(t) / t;
}
} // namespace

SuperpositionState::SuperpositionState(double q, double gauge_k,
                                       std::vector<SuperpositionTerm> terms,
                                       double amplitude)
    : q_(q), gauge_k_(gauge_k), amplitude_(amplitude), terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("superposition needs at least one term");
    }
    if (!(amplitude > 0.0)) {
        throw std::invalid_argument("superposition amplitude must be positive");
    }
    bool any_nonzero = false;
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        if (j > 0 && !(terms_[j].offset > terms_[j - 1].offset)) {
            throw std::invalid_argument("term offsets must be strictly increasing");
        }
        if (terms_[j].coeff != std::complex<double>{0.0, 0.0}) any_nonzero = true;
    }
    if (!any_nonzero) {
        throw std::invalid_argument("superposition needs a nonzero coefficient");
    }
}

std::complex<double> SuperpositionState::envelope(double x) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& term : terms_) {
        sum += term.coeff * std::polar(1.0, term.offset * x);
    }
    return sum;
}

std::complex<double> SuperpositionState::envelope_derivative(double x) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& term : terms_) {
        sum += std::complex<double>{0.0, term.offset} * term.coeff *
               std::polar(1.0, term.offset * x);
    }
    return sum;
}

double density(const SuperpositionState& state, double x) {
    const double a = state.amplitude();
    return a * a * std::norm(state.envelope(x));
}

double density_slope(const SuperpositionState& state, double x) {
    const double a = state.amplitude();
    return a * a * 2.0 *
           std::real(std::conj(state.envelope(x)) * state.envelope_derivative(x));
}

SeamWitness is_density_periodic(const SuperpositionState& state, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    SeamWitness witness;
    witness.value_jump = density(state, -kPi) - density(state, kPi);
    witness.slope_jump = density_slope(state, -kPi) - density_slope(state, kPi);

    // The density only contains frequencies n_i - n_j, so it matches the
    // ring period exactly when every pairwise difference is an integer.
    witness.periodic = true;
    const auto& terms = state.terms();
    for (std::size_t i = 0; i < terms.size() && witness.periodic; ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const double diff = terms[j].offset - terms[i].offset;
            if (std::abs(diff - std::round(diff)) > tol) {
                witness.periodic = false;
                witness.offending_pair = {terms[i].offset, terms[j].offset};
                break;
            }
        }
    }
    return witness;
}

std::complex<double> inner_product(const PlaneWaveState& a,
                                   const PlaneWaveState& b) {
    if (a.gauge_k() != b.gauge_k()) {
        throw std::invalid_argument(
            "inner product requires both states in the same gauge");
    }
    // (1/2pi) integral over one circumference of conj(psi_a) psi_b with unit
    // amplitudes; the gauge and base phases cancel, leaving sinc(dq * pi).
    return {sinc((b.q() - a.q()) * kPi), 0.0};
}

std::vector<std::vector<std::complex<double>>> gram_matrix(
    const std::vector<double>& qs, double gauge_k) {
    if (qs.empty()) throw std::invalid_argument("gram matrix needs at least one momentum");
    const std::size_t n = qs.size();
    std::vector<std::vector<std::complex<double>>> g(
        n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g[i][j] = inner_product(PlaneWaveState(qs[i], gauge_k),
                                    PlaneWaveState(qs[j], gauge_k));
        }
    }
    return g;
}

double band_energy(double q, int n) {
    const double total = q + n;
    return total * total;
}

OffsetPartition hilbert_subset_filter(const std::vector<double>& offsets,
                                      double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    OffsetPartition partition;
    for (double offset : offsets) {
        if (std::abs(offset - std::round(offset)) <= tol) {
            partition.accepted.push_back(offset);
        } else {
            partition.rejected.push_back(offset);
        }
    }
    return partition;
}

} // namespace ringop
