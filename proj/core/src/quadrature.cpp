#include "ringop/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ringop {

// Classic Newton iteration on the Legendre recurrence with cosine initial
// guesses.  Nodes come out ascending; the rule is symmetric about zero.
GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");

    GaussLegendreRule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p_prev = 1.0;
            double p = x;
            for (int j = 2; j <= n; ++j) {
                const double p_next = ((2 * j - 1) * x * p - (j - 1) * p_prev) / j;
                p_prev = p;
                p = p_next;
            }
            deriv = n * (x * p - p_prev) / (x * x - 1.0);
            const double step = p / deriv;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        // The guesses start near +1; mirror to fill the ascending list.
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

} // namespace ringop
