#pragma once

#include <cstdint>
#include <functional>

namespace crownvol {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
    long long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7/15 bisection on [a, b]. Stops when the local
/// error estimate satisfies the absolute or relative tolerance.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double abs_tol = 1e-10,
                                    double rel_tol = 1e-10,
                                    int max_depth = 48);

/// tanh-sinh (double-exponential) rule on [a, b]; robust against integrable
/// endpoint singularities (log, inverse-power < 1).
QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     double tol = 1e-11, int max_level = 12);

/// Fixed 2048-point composite Gauss-Legendre rule on [a, b]; used where a
/// smooth integrand at a known fixed cost is wanted.
double integrate_gl2048(const Integrand& f, double a, double b);

} // namespace crownvol
