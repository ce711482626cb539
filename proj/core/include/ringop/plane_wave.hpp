#pragma once

#include <complex>
#include <span>

#include "ringop/ring_grid.hpp"

namespace ringop {

/// Amplitude that normalizes a plane wave over one ring circumference.
double unit_ring_amplitude(); // 1 / sqrt(2 pi)

/// Continuum momentum eigenfunction psi(x) = A e^{i (q + gauge_k) x} on the
/// ring coordinate x in [-pi, pi).  q is the gauge-independent momentum
/// eigenvalue, gauge_k the arbitrary gauge constant (hbar = 1).
class PlaneWaveState {
public:
    PlaneWaveState(double q, double gauge_k);
    PlaneWaveState(double q, double gauge_k, double amplitude);

    double q() const noexcept { return q_; }
    double gauge_k() const noexcept { return gauge_k_; }
    double amplitude() const noexcept { return amplitude_; }

    std::complex<double> value(double x) const;

private:
    double q_;
    double gauge_k_;
    double amplitude_;
};

/// Eigenvalue of the momentum operator -i d/dx - gauge_k applied to the
/// state.  The derivative brings down (q + gauge_k) and the gauge term
/// subtracts gauge_k again, so the result is q with the gauge constant
/// cancelling identically.
double apply_momentum_analytic(const PlaneWaveState& state);

/// Smooth self-join of psi itself at the seam: true iff the total winding
/// q + gauge_k is within tol of an integer.
bool check_linear_bc(const PlaneWaveState& state, double tol = 1e-9);

/// Eigenvalue selected by the smooth-join condition for integer winding m:
/// n = m - gauge_k.  Explicitly gauge dependent.
double linear_bc_eigenvalue(int m, double gauge_k);

/// Seam continuity report for the density/current boundary condition.
/// Jumps are value(-pi side) minus value(+pi side).
struct NonlinearBcReport {
    double density_jump = 0.0;
    double phase_gradient_jump = 0.0;
    double current_jump = 0.0;
    bool satisfied = false;
};

/// Continuity of |psi|^2, of the phase gradient, and of the probability
/// current across the seam.  A plane wave has constant amplitude and
/// constant phase gradient, so every jump vanishes identically and the
/// condition holds for all real q and gauge_k.
NonlinearBcReport check_nonlinear_bc(const PlaneWaveState& state);

/// Phase discontinuity of the state at the seam, 2 pi (q + gauge_k) wrapped
/// into (-pi, pi].  Identical to twist_from_state(q, gauge_k).
double phase_jump(const PlaneWaveState& state);

/// Derivative of a complex function split into amplitude/phase parts:
/// d psi/dx = (A_x + i A alpha_x) e^{i alpha}.
struct PolarDerivative {
    double amp_gradient = 0.0;   // A_x
    double phase_gradient = 0.0; // alpha_x
    double amplitude = 0.0;      // A
    double phase = 0.0;          // alpha

    std::complex<double> reconstruct() const;
};

/// Centered-difference polar derivative of a sampled complex function at one
/// grid index, with periodic wraparound.  The phase difference between
/// adjacent samples is taken on the nearest branch, which assumes
/// |delta alpha| < pi per step.  Throws std::domain_error if the sample or
/// either neighbor has zero amplitude (phase undefined).
PolarDerivative polar_decompose_derivative(
    const RingGrid& grid, std::span<const std::complex<double>> samples,
    int index);

} // namespace ringop
