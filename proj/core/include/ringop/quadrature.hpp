#pragma once

#include <numbers>
#include <type_traits>
#include <vector>

namespace ringop {

/// Composite trapezoid over [a, b] with n_points samples including both
/// endpoints (n_points - 1 panels).  Spectrally accurate when the integrand
/// is smooth and (b - a)-periodic, second order otherwise.
template <class F>
auto trapezoid(F&& f, double a, double b, int n_points) {
    using R = std::invoke_result_t<F&, double>;
    const int panels = n_points - 1;
    const double h = (b - a) / panels;
    R acc = R(0.5) * (f(a) + f(b));
    for (int j = 1; j < panels; ++j) acc += f(a + j * h);
    return acc * h;
}

/// Trapezoid on the uniform periodic grid: n_points samples x_j = a + j*h,
/// the wraparound panel closing the period implicitly.  Exact up to rounding
/// for trigonometric polynomials whose frequencies resolve on the grid.
template <class F>
auto trapezoid_periodic(F&& f, double a, double b, int n_points) {
    using R = std::invoke_result_t<F&, double>;
    const double h = (b - a) / n_points;
    R acc = R(0);
    for (int j = 0; j < n_points; ++j) acc += f(a + j * h);
    return acc * h;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Integrate f over [a, b] with a Gauss-Legendre rule.
template <class F>
auto gauss_legendre_integrate(F&& f, double a, double b,
                              const GaussLegendreRule& rule) {
    using R = std::invoke_result_t<F&, double>;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    R acc = R(0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

} // namespace ringop
