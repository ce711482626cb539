// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 only if all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringop/operator_matrix.hpp"
#include "ringop/plane_wave.hpp"
#include "ringop/quadrature.hpp"
#include "ringop/spectrum.hpp"
#include "ringop/superposition.hpp"
#include "ringop/sweep.hpp"
#include "ringop/table_io.hpp"

using namespace ringop;
using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << '\n';
    if (!pass) ++failures;
}

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

double nearest(const std::vector<double>& values, double target) {
    double best = values.front();
    for (double v : values) {
        if (std::abs(v - target) < std::abs(best - target)) best = v;
    }
    return best;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

// 1. Untwisted N=20 levels nearest {-1, 0, +1} match the closed form to
//    1e-9 and the labeled integers to 0.017; runtime < 0.1 s.
void criterion_1() {
    const auto start = clock_type::now();
    const RingGrid grid(20);
    const auto numeric =
        hermitian_eigen(build_twisted_operator(grid, 0.0, 0.0)).eigenvalues;
    const auto formula = analytic_twisted_spectrum(grid, 0.0, 0.0);
    const double ms = elapsed_ms(start);

    double worst = 0.0;
    double worst_integer = 0.0;
    for (double target : {-1.0, 0.0, 1.0}) {
        const double got = nearest(numeric, target);
        const double expected = nearest(formula, target);
        worst = std::max(worst, std::abs(got - expected));
        worst_integer = std::max(worst_integer, std::abs(got - target));
    }
    const double reference = (10.0 / pi) * std::sin(pi / 10.0); // 0.98363...
    const bool values_ok =
        std::abs(nearest(numeric, 1.0) - reference) <= 1e-9 &&
        std::abs(nearest(numeric, -1.0) + reference) <= 1e-9 &&
        std::abs(nearest(numeric, 0.0)) <= 1e-9;

    const bool pass = worst <= 1e-9 && values_ok && worst_integer <= 0.017 && ms < 100.0;
    report(1, "untwisted N=20 levels at {-1, 0, +1}", pass,
           "oracle dev " + fmt(worst) + ", integer dev " + fmt(worst_integer) +
               ", " + fmt(ms) + " ms");
}

// 2. 181-step sweep: per level two monotone branches straddling the
//    untwisted value, split width at pi/2 matching the closed form to 1e-9;
//    sweep under 1 s.
void criterion_2() {
    const auto start = clock_type::now();
    const RingGrid grid(20);
    const auto table = phi_sweep(grid, 0.0, 181);
    const double ms = elapsed_ms(start);

    const double inv_dx = 1.0 / grid.dx();
    bool pass = ms < 1000.0;
    double worst_split = 0.0;

    std::vector<const SweepRow*> plus, minus;
    for (const auto& row : table.rows) {
        (row.branch_sign > 0 ? plus : minus).push_back(&row);
    }

    for (int m : {-1, 0, 1}) {
        const double at_zero = std::sin(2.0 * pi * m / 20.0) * inv_dx;
        double prev_up = at_zero;
        double prev_down = at_zero;
        double prev_separation = 0.0;
        for (std::size_t step = 1; step < table.phi_values.size(); ++step) {
            const double phi = table.phi_values[step];
            const double up = nearest(plus[step]->eigenvalues,
                                      std::sin((2.0 * pi * m + phi) / 20.0) * inv_dx);
            const double down = nearest(minus[step]->eigenvalues,
                                        std::sin((2.0 * pi * m - phi) / 20.0) * inv_dx);
            // exactly two distinct branch values, diverging monotonically
            if (phi < pi && !(up > at_zero && down < at_zero)) pass = false;
            if (!(up >= prev_up && down <= prev_down)) pass = false;
            const double separation = up - down;
            if (separation < prev_separation) pass = false;
            prev_up = up;
            prev_down = down;
            prev_separation = separation;
            if (step == 90) { // phi = pi/2 on the 181-step grid
                const double expected = 2.0 * (10.0 / pi) * std::sin(pi / 40.0) *
                                        std::cos(2.0 * pi * m / 20.0);
                worst_split = std::max(worst_split, std::abs(separation - expected));
            }
        }
    }
    pass = pass && worst_split <= 1e-9;
    report(2, "level splitting across the twist sweep", pass,
           "split dev at pi/2 " + fmt(worst_split) + ", " + fmt(ms) + " ms");
}

// 3. 200 random (N, k, phi): numeric spectrum vs closed form within 1e-9.
void criterion_3() {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> pick_n(3, 40);
    std::uniform_real_distribution<double> pick_k(-2.0, 2.0);
    std::uniform_real_distribution<double> pick_phi(std::nextafter(-pi, 0.0), pi);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const RingGrid grid(pick_n(rng));
        const double k = pick_k(rng);
        const double phi = pick_phi(rng);
        const auto numeric =
            hermitian_eigen(build_twisted_operator(grid, k, phi)).eigenvalues;
        const auto formula = analytic_twisted_spectrum(grid, k, phi);
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            worst = std::max(worst, std::abs(numeric[i] - formula[i]));
        }
    }
    report(3, "numeric spectra match the closed form on random inputs",
           worst <= 1e-9, "max dev " + fmt(worst) + " over 200 draws");
}

// 4. 1000 random configurations: constructed matrix equals its conjugate
//    transpose exactly, twisted seam cells included.
void criterion_4() {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> pick_n(3, 40);
    std::uniform_real_distribution<double> pick_k(-2.0, 2.0);
    std::uniform_real_distribution<double> pick_phi(-10.0, 10.0);
    bool pass = true;
    for (int trial = 0; trial < 1000 && pass; ++trial) {
        const RingGrid grid(pick_n(rng));
        const auto m = build_twisted_operator(grid, pick_k(rng), pick_phi(rng));
        for (int r = 0; r < m.n() && pass; ++r) {
            for (int c = 0; c < m.n(); ++c) {
                const cplx a = m(r, c);
                const cplx b = m(c, r);
                if (!(a.real() == b.real() && a.imag() == -b.imag())) {
                    pass = false;
                    break;
                }
            }
        }
    }
    report(4, "exact Hermiticity over 1000 random configurations", pass, "");
}

// 5. Smooth-join eigenvalue reproduces m - k exactly; twisted spectra for
//    k = 0 and k = 0.25 differ by the rigid shift 0.25.
void criterion_5() {
    bool exact = true;
    for (int m : {-3, -1, 0, 1, 2, 7}) {
        for (double k : {0.0, 0.25, 0.5, 1.25, -2.5}) {
            if (linear_bc_eigenvalue(m, k) != m - k) exact = false;
        }
    }
    if (linear_bc_eigenvalue(1, 0.25) != 0.75) exact = false;

    const RingGrid grid(20);
    double worst = 0.0;
    for (double phi : {0.0, 1.3}) {
        const auto base =
            hermitian_eigen(build_twisted_operator(grid, 0.0, phi)).eigenvalues;
        const auto shifted =
            hermitian_eigen(build_twisted_operator(grid, 0.25, phi)).eigenvalues;
        for (std::size_t i = 0; i < base.size(); ++i) {
            worst = std::max(worst, std::abs((base[i] - shifted[i]) - 0.25));
        }
    }
    report(5, "gauge dependence of the smooth-join rule", exact && worst <= 1e-10,
           "spectrum shift dev " + fmt(worst));
}

// 6. q = 0.37, k in {0, 0.5, 1.2}: twisted eigenvalue converges to q at
//    second order; all N = 320 errors under 1e-3; under 5 s.
void criterion_6() {
    const auto start = clock_type::now();
    const auto rows =
        convergence_study(0.37, {0.0, 0.5, 1.2}, {20, 40, 80, 160, 320});
    const double ms = elapsed_ms(start);

    bool pass = ms < 5000.0;
    std::string detail;
    for (double k : {0.0, 0.5, 1.2}) {
        std::vector<std::pair<double, double>> points;
        double final_error = 1.0;
        for (const auto& row : rows) {
            if (row.gauge_k != k) continue;
            points.emplace_back(row.dx, row.error);
            if (row.n_points == 320) final_error = row.error;
        }
        const double slope = fit_loglog_slope(points);
        if (!(slope >= 1.9 && slope <= 2.1)) pass = false;
        if (!(final_error < 1e-3)) pass = false;
        if (!detail.empty()) detail += ", ";
        detail += "k=" + std::to_string(k).substr(0, 4) + " slope " +
                  std::to_string(slope).substr(0, 5);
    }
    report(6, "gauge invariance restored under grid refinement", pass,
           detail + ", " + fmt(ms) + " ms");
}

// 7. 100 random offset sets: integer-difference classifier and numeric seam
//    witness (value + slope, tol 1e-6) agree every time.
void criterion_7() {
    std::mt19937 rng(46692);
    std::uniform_int_distribution<int> pick_count(2, 6);
    std::uniform_int_distribution<int> pick_step(1, 3);
    std::uniform_real_distribution<double> pick_frac(0.05, 0.45);
    std::uniform_real_distribution<double> pick_mod(0.5, 1.5);
    std::uniform_real_distribution<double> pick_arg(-pi, pi);
    std::bernoulli_distribution coin(0.5);

    int agreements = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int count = pick_count(rng);
        const bool make_periodic = coin(rng);
        const double shared_shift = coin(rng) ? pick_frac(rng) : 0.0;
        std::vector<SuperpositionTerm> terms;
        int base = 0;
        for (int j = 0; j < count; ++j) {
            double offset = base + (make_periodic ? shared_shift : 0.0);
            if (!make_periodic && j % 2 == 1) offset += pick_frac(rng);
            terms.push_back({offset, std::polar(pick_mod(rng), pick_arg(rng))});
            base += pick_step(rng);
        }
        const SuperpositionState state(0.0, 0.0, std::move(terms));
        const auto witness = is_density_periodic(state);
        const bool numerically_smooth = std::abs(witness.value_jump) <= 1e-6 &&
                                        std::abs(witness.slope_jump) <= 1e-6;
        if (witness.periodic == make_periodic &&
            witness.periodic == numerically_smooth) {
            ++agreements;
        }
    }
    report(7, "periodicity classifier agrees with the seam witness",
           agreements == 100, std::to_string(agreements) + "/100");
}

// 8. Gram of {-2,...,2} is the identity within 1e-12; the closed-form
//    fractional inner product matches a 1024-point quadrature within 1e-8.
void criterion_8() {
    const auto gram = gram_matrix({-2.0, -1.0, 0.0, 1.0, 2.0}, 0.0);
    double worst_gram = 0.0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            const double target = i == j ? 1.0 : 0.0;
            worst_gram = std::max(worst_gram, std::abs(gram[i][j] - cplx{target, 0.0}));
        }
    }

    const cplx closed = inner_product(PlaneWaveState(0.0, 0.0), PlaneWaveState(0.5, 0.0));
    const auto rule = gauss_legendre(1024);
    const auto integrand = [](double x) { return std::polar(1.0, 0.5 * x); };
    const cplx quad = gauss_legendre_integrate(integrand, -pi, pi, rule) / (2.0 * pi);
    const double quad_dev = std::abs(closed - quad);
    const double value_dev = std::abs(closed.real() - 2.0 / pi);

    const bool pass = worst_gram <= 1e-12 && quad_dev <= 1e-8 && value_dev <= 1e-12;
    report(8, "orthonormal integer subset, non-orthonormal fractions", pass,
           "gram dev " + fmt(worst_gram) + ", quadrature dev " + fmt(quad_dev));
}

// 9. Band minimum at (q=0, n=0) with E=0; zone-edge degeneracy
//    E(0.5, 0) = E(-0.5, 1) = 0.25 exactly.
void criterion_9() {
    const auto rows = band_table(-1, 1, 101);
    bool pass = true;
    double min_energy = rows.front().energy;
    double min_q = rows.front().q;
    int min_n = rows.front().n;
    for (const auto& row : rows) {
        if (row.energy < 0.0) pass = false;
        if (row.energy < min_energy) {
            min_energy = row.energy;
            min_q = row.q;
            min_n = row.n;
        }
    }
    if (!(min_energy == 0.0 && min_q == 0.0 && min_n == 0)) pass = false;
    if (band_energy(0.5, 0) != 0.25) pass = false;
    if (band_energy(-0.5, 1) != 0.25) pass = false;
    report(9, "quadratic bands with zone-edge degeneracy", pass,
           "min E " + fmt(min_energy) + " at q=" + fmt(min_q));
}

// 10. Emitted sweep CSV re-parses to bit-identical eigenvalues and identical
//     runs produce byte-identical text.
void criterion_10() {
    const RingGrid grid(20);
    const auto table = phi_sweep(grid, 0.0, 181);

    std::ostringstream first;
    emit_sweep_csv(table, first);
    std::ostringstream second;
    emit_sweep_csv(table, second);
    bool pass = first.str() == second.str();

    std::istringstream in(first.str());
    const auto records = parse_sweep_csv(in);
    std::size_t cursor = 0;
    for (const auto& row : table.rows) {
        for (double value : row.eigenvalues) {
            if (cursor >= records.size() ||
                std::bit_cast<std::uint64_t>(records[cursor].eigenvalue) !=
                    std::bit_cast<std::uint64_t>(value)) {
                pass = false;
            }
            ++cursor;
        }
    }
    pass = pass && cursor == records.size();
    report(10, "deterministic, bit-exact CSV round trip", pass,
           std::to_string(records.size()) + " rows");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
