#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "ringop/plane_wave.hpp"

namespace ringop {

struct SuperpositionTerm {
    double offset = 0.0;                   // n_j, relative to the base momentum
    std::complex<double> coeff{0.0, 0.0};  // a_j
};

/// Superposition over a base momentum q:
///
///   psi(x) = A e^{i gauge_k x} e^{i q x} sum_j a_j e^{i n_j x}
///
/// Offsets must be strictly increasing and at least one coefficient nonzero;
/// by convention the first offset is 0 (the base term).
class SuperpositionState {
public:
    SuperpositionState(double q, double gauge_k,
                       std::vector<SuperpositionTerm> terms,
                       double amplitude = 1.0);

    double q() const noexcept { return q_; }
    double gauge_k() const noexcept { return gauge_k_; }
    double amplitude() const noexcept { return amplitude_; }
    const std::vector<SuperpositionTerm>& terms() const noexcept { return terms_; }

    /// sum_j a_j e^{i n_j x}  (the global phase factors are left out; they
    /// have unit modulus and never reach the density).
    std::complex<double> envelope(double x) const;
    std::complex<double> envelope_derivative(double x) const;

private:
    double q_;
    double gauge_k_;
    double amplitude_;
    std::vector<SuperpositionTerm> terms_;
};

/// Probability density |psi(x)|^2 = A^2 |sum_j a_j e^{i n_j x}|^2.
/// Independent of q and gauge_k.
double density(const SuperpositionState& state, double x);

/// d/dx of the density, evaluated from the analytic derivative of the
/// envelope.
double density_slope(const SuperpositionState& state, double x);

/// Outcome of the ring-periodicity test for a superposition's density.
struct SeamWitness {
    bool periodic = false;
    double value_jump = 0.0;  // density(-pi) - density(pi)
    double slope_jump = 0.0;  // density'(-pi) - density'(pi)
    std::optional<std::pair<double, double>> offending_pair;
};

/// The density is ring periodic iff every pairwise offset difference
/// n_i - n_j is an integer (within tol).  That exact criterion decides the
/// verdict; the returned numeric seam jumps witness it independently.
/// Value-only seam comparison is not enough: an even-symmetric density can
/// match values at the seam while its slope jumps, so both are reported.
SeamWitness is_density_periodic(const SuperpositionState& state,
                                double tol = 1e-9);

/// Ring inner product (1/2pi) integral conj(psi_a) psi_b dx over one
/// circumference, with unit amplitudes.  Closed form sinc((q_b - q_a) pi)
/// where sinc(t) = sin(t)/t and sinc(0) = 1.  Both states must carry the
/// same gauge constant, otherwise std::invalid_argument.
std::complex<double> inner_product(const PlaneWaveState& a,
                                   const PlaneWaveState& b);

/// Gram matrix G[i][j] = inner_product of plane waves q_i, q_j at a common
/// gauge.  Hermitian with unit diagonal.  Integer-separated momenta give the
/// identity; fractional separations do not.
std::vector<std::vector<std::complex<double>>> gram_matrix(
    const std::vector<double>& qs, double gauge_k);

/// Kinetic band energy E_n(q) = (q + n)^2, with hbar = 1 and 2m = 1.
double band_energy(double q, int n);

struct OffsetPartition {
    std::vector<double> accepted; // integer offsets: the orthonormal subset
    std::vector<double> rejected; // fractional offsets
};

/// Partition candidate offsets by whether they sit within tol of an integer
/// (relative to the base offset 0).  The accepted offsets, as plane waves at
/// a fixed q, have an identity Gram matrix.
OffsetPartition hilbert_subset_filter(const std::vector<double>& offsets,
                                      double tol = 1e-9);

} // namespace ringop
