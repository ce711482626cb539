#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "ringop/operator_matrix.hpp"
#include "ringop/plane_wave.hpp"
#include "ringop/superposition.hpp"

using namespace ringop;
using cplx = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("momentum eigenvalue is gauge independent") {
    CHECK(apply_momentum_analytic(PlaneWaveState(1.5, 0.3)) == 1.5);
    CHECK(apply_momentum_analytic(PlaneWaveState(0.0, 7.2)) == 0.0);
    CHECK(apply_momentum_analytic(PlaneWaveState(-2.7, 5.0)) == -2.7);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> pick(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double q = pick(rng);
        CHECK(apply_momentum_analytic(PlaneWaveState(q, pick(rng))) ==
              apply_momentum_analytic(PlaneWaveState(q, pick(rng))));
    }
}

TEST_CASE("plane wave value and normalization default") {
    const PlaneWaveState state(2.0, 0.0);
    CHECK(state.amplitude() == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(std::abs(state.value(0.7) - std::polar(state.amplitude(), 2.0 * 0.7)) == 0.0);
    CHECK_THROWS_AS(PlaneWaveState(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PlaneWaveState(1.0, 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("smooth self-join needs integer total winding") {
    CHECK(check_linear_bc(PlaneWaveState(1.75, 0.25)));
    CHECK_FALSE(check_linear_bc(PlaneWaveState(0.5, 0.0)));
    CHECK(check_linear_bc(PlaneWaveState(0.5, 0.5)));

    // the accepted case really does join smoothly at the seam
    const PlaneWaveState joined(0.5, 0.5);
    CHECK(std::abs(joined.value(-pi) - joined.value(pi)) <= 1e-12);
    const PlaneWaveState split(0.5, 0.0);
    CHECK(std::abs(split.value(-pi) - split.value(pi)) > 0.1);

    CHECK_THROWS_AS(check_linear_bc(PlaneWaveState(0.0, 0.0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("smooth-join eigenvalue is explicitly gauge dependent") {
    CHECK(linear_bc_eigenvalue(1, 0.25) == 0.75);
    CHECK(linear_bc_eigenvalue(0, 0.0) == 0.0);
    CHECK(linear_bc_eigenvalue(1, 1.0) == 0.0);

    // dyadic gauges keep the arithmetic exact
    for (double k1 : {0.0, 0.25, 1.5}) {
        for (double k2 : {0.5, -0.75}) {
            CHECK(linear_bc_eigenvalue(3, k1) - linear_bc_eigenvalue(3, k2) ==
                  k2 - k1);
        }
    }
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> pick(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double k1 = pick(rng), k2 = pick(rng);
        CHECK(std::abs((linear_bc_eigenvalue(2, k1) - linear_bc_eigenvalue(2, k2)) -
                       (k2 - k1)) <= 1e-14);
    }
}

TEST_CASE("density and current continuity holds for every plane wave") {
    const auto zero_report = check_nonlinear_bc(PlaneWaveState(0.37, 1.2));
    CHECK(zero_report.satisfied);
    CHECK(zero_report.density_jump == 0.0);
    CHECK(zero_report.phase_gradient_jump == 0.0);
    CHECK(zero_report.current_jump == 0.0);

    CHECK(check_nonlinear_bc(PlaneWaveState(0.0, 0.0)).satisfied);

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> pick(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(check_nonlinear_bc(PlaneWaveState(pick(rng), pick(rng))).satisfied);
    }
}

TEST_CASE("a fractional-offset superposition breaks the density continuity") {
    // Same seam check, routed through the superposition density: the density
    // 2 + 2 cos(x/2) matches values at the seam but its slope flips sign.
    const SuperpositionState state(0.0, 0.0, {{0.0, {1.0, 0.0}}, {0.5, {1.0, 0.0}}});
    CHECK(density_slope(state, pi) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(density_slope(state, -pi) == doctest::Approx(1.0).epsilon(1e-12));
    const auto witness = is_density_periodic(state);
    CHECK_FALSE(witness.periodic);
    CHECK(std::abs(witness.slope_jump - 2.0) <= 1e-12);
}

TEST_CASE("seam phase jump") {
    CHECK(phase_jump(PlaneWaveState(0.25, 0.0)) == pi / 2.0);
    CHECK(phase_jump(PlaneWaveState(1.0, 0.0)) == 0.0);
    CHECK(phase_jump(PlaneWaveState(0.6, 0.0)) == -0.8 * pi);

    // consistent with the matrix-side twist
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> pick(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double q = pick(rng), k = pick(rng);
        CHECK(phase_jump(PlaneWaveState(q, k)) == twist_from_state(q, k));
    }

    // smooth join implies zero seam jump (exact integer windings)
    for (double k : {0.0, 0.25, -1.5}) {
        for (int m : {-2, 0, 1, 3}) {
            const double q = m - k;
            if (q + k == static_cast<double>(m)) {
                CHECK(phase_jump(PlaneWaveState(q, k)) == 0.0);
            }
        }
    }
}

TEST_CASE("polar derivative of a plane wave") {
    const RingGrid grid(64);
    const PlaneWaveState state(2.0, 0.0, 1.0);
    std::vector<cplx> samples;
    for (double x : grid.x_values()) samples.push_back(state.value(x));

    for (int index : {0, 13, 31, 63}) {
        const auto d = polar_decompose_derivative(grid, samples, index);
        CHECK(std::abs(d.amp_gradient) <= 1e-12);
        CHECK(d.phase_gradient == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(d.amplitude == doctest::Approx(1.0).epsilon(1e-14));
        // reconstruction equals the analytic derivative i (q+k) psi
        const cplx analytic = cplx{0.0, 2.0} * samples[static_cast<std::size_t>(index)];
        CHECK(std::abs(d.reconstruct() - analytic) <= 1e-10);
    }
}

TEST_CASE("polar derivative of a constant function is zero") {
    const RingGrid grid(16);
    std::vector<cplx> samples(16, cplx{0.7, 0.4});
    const auto d = polar_decompose_derivative(grid, samples, 5);
    CHECK(d.amp_gradient == 0.0);
    CHECK(d.phase_gradient == 0.0);
}

TEST_CASE("polar phase gradient matches a finite-difference oracle") {
    // envelope 1 + 0.5 e^{ix} sampled at roughly dx = 1e-4 around x = 0
    const RingGrid grid(62832);
    const SuperpositionState state(0.0, 0.0, {{0.0, {1.0, 0.0}}, {1.0, {0.5, 0.0}}});
    std::vector<cplx> samples;
    samples.reserve(static_cast<std::size_t>(grid.n_points()));
    for (double x : grid.x_values()) samples.push_back(state.envelope(x));

    const int index = grid.n_points() / 2; // x very close to 0
    const auto d = polar_decompose_derivative(grid, samples, index);

    const double x0 = grid.x(index);
    const double h = 1e-4;
    const auto arg_at = [&](double x) { return std::arg(state.envelope(x)); };
    const double oracle = (arg_at(x0 + h) - arg_at(x0 - h)) / (2.0 * h);

    CHECK(std::abs(d.phase_gradient - oracle) <= 1e-6);
    CHECK(d.phase_gradient == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("polar derivative rejects zero amplitude") {
    const RingGrid grid(8);
    std::vector<cplx> samples(8, cplx{1.0, 0.0});
    samples[3] = cplx{0.0, 0.0};
    CHECK_THROWS_AS(polar_decompose_derivative(grid, samples, 3), std::domain_error);
    CHECK_THROWS_AS(polar_decompose_derivative(grid, samples, 2), std::domain_error);
    CHECK_THROWS_AS(polar_decompose_derivative(grid, samples, 4), std::domain_error);
    CHECK_NOTHROW(polar_decompose_derivative(grid, samples, 6));
    CHECK_THROWS_AS(polar_decompose_derivative(grid, samples, 8), std::invalid_argument);
}
