#pragma once

// Real dilogarithm, its real part beyond the unit interval, and the
// Rogers-type L function used by the closed-form volumes.

namespace crownvol {

/// Li2(x) = sum_{k>=1} x^k/k^2 for x <= 1. Reduced to |x| <= 1/2 by the
/// Euler reflection and Landen transforms before summing the series;
/// relative accuracy ~1e-15 on [-1, 1].
/// Throws std::domain_error for x > 1.
double dilog(double x);

/// Re Li2(x) for x > 1 via the reflection
///   Re Li2(x) = pi^2/3 - (1/2) log^2 x - Li2(1/x).
/// Throws std::domain_error for x <= 1.
double dilog_re(double x);

/// Re Li2 on the whole real line (dispatches between the two above).
double dilog_any(double x);

/// Rogers-type function with the (pi/6) normalization:
///   L(x) = (pi/6) [ Li2(x) + (1/2) log(x) log(1-x) ],  0 < x < 1.
double rogers_L(double x);

/// L(x)+L(y)-L(xy)-L(x(1-y)/(1-xy))-L(y(1-x)/(1-xy)) for x,y in (0,1).
/// Vanishes identically (five-term relation); returned for testing.
double five_term_residual(double x, double y);

/// dilog_re(1+e^P) + dilog_re(1+e^{-P}) - (pi^2 - P^2)/2.
/// The constant follows from Li2(1-z)+Li2(1-1/z) = -(1/2)log^2 z at z = -e^P
/// with principal-branch real parts.
double two_term_residual(double P);

} // namespace crownvol
