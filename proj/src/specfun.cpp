#include "crownvol/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crownvol {

namespace {

constexpr double kPi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

// Series for |x| <= 1/2; geometric convergence, ~55 terms reach 1e-17.
double dilog_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 2; k < 80; ++k) {
        term *= x;
        double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Reduction to |x| <= 1/2 for x in [-1, 1].
double dilog_reduced(double x) {
    if (x == 1.0) return kPi2_6;
    if (x > 0.5) {
        // Euler reflection: Li2(x) = pi^2/6 - log(x)log(1-x) - Li2(1-x)
        return kPi2_6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - (1/2) log^2(1-x)
        double l = std::log1p(-x);
        return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
    }
    return dilog_series(x);
}

} // namespace

double dilog(double x) {
    if (x > 1.0)
        throw std::domain_error("dilog: argument > 1, use dilog_re");
    if (x == 0.0) return 0.0;
    if (x < -1.0) {
        // Inversion: Li2(x) = -Li2(1/x) - pi^2/6 - (1/2) log^2(-x)
        double lx = std::log(-x);
        return -dilog_reduced(1.0 / x) - kPi2_6 - 0.5 * lx * lx;
    }
    return dilog_reduced(x);
}

double dilog_re(double x) {
    if (x <= 1.0)
        throw std::domain_error("dilog_re: argument <= 1, use dilog");
    double lx = std::log(x);
    return 2.0 * kPi2_6 - 0.5 * lx * lx - dilog(1.0 / x);
}

double dilog_any(double x) { return x > 1.0 ? dilog_re(x) : dilog(x); }

double rogers_L(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("rogers_L: argument outside (0,1)");
    return (std::numbers::pi / 6.0) *
           (dilog(x) + 0.5 * std::log(x) * std::log1p(-x));
}

double five_term_residual(double x, double y) {
    if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
        throw std::domain_error("five_term_residual: arguments outside (0,1)");
    double xy = x * y;
    return rogers_L(x) + rogers_L(y) - rogers_L(xy) -
           rogers_L(x * (1.0 - y) / (1.0 - xy)) -
           rogers_L(y * (1.0 - x) / (1.0 - xy));
}

double two_term_residual(double P) {
    double s = dilog_re(1.0 + std::exp(P)) + dilog_re(1.0 + std::exp(-P));
    return s - (std::numbers::pi * std::numbers::pi - P * P) / 2.0;
}

} // namespace crownvol
