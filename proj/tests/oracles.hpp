#pragma once

// Test-only independent oracles: adaptive Simpson quadrature and lognormal
// expectations. These deliberately share no code with the library's closed
// forms.

#include <cmath>
#include <functional>

namespace tenorlab::testing {

namespace detail {

inline double simpson3(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double whole,
                          double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson3(f, a, m);
    const double right = simpson3(f, m, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, left, 0.5 * eps, depth - 1) +
           simpson_rec(f, m, b, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double eps = 1e-12) {
    if (a == b) return 0.0;
    return detail::simpson_rec(f, a, b, detail::simpson3(f, a, b), eps, 48);
}

/// E[g(X)] for lognormal X with ln X ~ N(mean_log, sd_log^2).
inline double lognormal_expectation(const std::function<double(double)>& g, double mean_log,
                                    double sd_log, double eps = 1e-13) {
    const double inv_sqrt_2pi = 0.3989422804014326779;
    return adaptive_simpson(
        [&](double z) {
            return g(std::exp(mean_log + sd_log * z)) * inv_sqrt_2pi * std::exp(-0.5 * z * z);
        },
        -12.0, 12.0, eps);
}

}  // namespace tenorlab::testing
