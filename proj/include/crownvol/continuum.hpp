#pragma once

#include <functional>
#include <span>
#include <vector>

// Discrete-to-continuum checks: Schwarzian derivative and its cocycle, the
// epsilon-expansion of the discrete crown action, the cross-ratio
// discretization, and the convergence of the discrete symplectic form to the
// Gelfand-Fuchs form plus its correction term.

namespace crownvol {

/// Quasiperiodic circle map with analytic derivatives:
/// f(t+1) = f(t) + quasiperiod, f' > 0. Used both for diffeomorphisms of the
/// circle and for reparametrizations g evaluated on f-values (where the
/// quasiperiod field is ignored).
struct SmoothTestFn {
    std::function<double(double)> f;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    std::function<double(double)> d3;
    double quasiperiod = 0.0;
};

/// Periodic tangent direction with analytic derivatives (period 1).
struct Variation {
    std::function<double(double)> u;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

/// Sampled diffeomorphism: values Delta_i = f(i/n) - f(0), i = 1..n.
struct DiffeoGrid {
    int n = 0;
    double perimeter = 0.0;
    std::vector<double> delta_pos;  // Delta_1..Delta_n (Delta_n = perimeter)
};

DiffeoGrid diffeo_grid(const SmoothTestFn& f, int n);

double schwarzian_from_derivs(double d1, double d2, double d3);

/// S[f,t] = f'''/f' - (3/2)(f''/f')^2.
double schwarzian(const SmoothTestFn& fn, double t);

/// S[g.f, t] - (f')^2 S[g, f] - S[f, t]; identically zero (cocycle law).
double cocycle_residual(const SmoothTestFn& g, const SmoothTestFn& f, double t);

/// S[(a e^{alpha f} + b)/(c e^{alpha f} + d), f] + alpha^2/2, computed from
/// honest derivatives of the composed map; identically zero.
double moebius_exp_schwarzian_residual(double a, double b, double c, double d,
                                       double alpha, const SmoothTestFn& f,
                                       double t);

/// sum_{i=1}^{n} log(e^{f(t_i + eps) - f(t_i - eps)} - 1), eps = 1/n.
double discrete_crown_action(const SmoothTestFn& f, int n);

/// Richardson limit over the given grid sizes of R(eps)/eps where
/// R(eps) = discrete action - [log(2 eps)/eps + (1/eps) int log f' + P];
/// converges to (1/6) int (f'''/f' + f'^2). With three or more sizes the raw
/// sequence must approach the extrapolant monotonically, else throws.
double action_expansion_coefficient(const SmoothTestFn& f, std::span<const int> grid_sizes);

/// int_0^1 S[f,t] dt + (1/2) int_0^1 f'''/f' dt (zero for periodic f').
double hill_identity_residual(const SmoothTestFn& f);

/// (4 - cross ratio of f at t, t+eps, t+2eps, t+3eps) / (2 eps^2);
/// approximates S[f, t + 3 eps/2] to O(eps).
double cross_ratio_schwarzian(const SmoothTestFn& f, double t, int n);

/// Symplectic pairing of two variations through the crown coordinate chain
/// Delta_i = f(i/n) -> x -> xi at finite odd n, with exact directional
/// derivatives of log xi.
double discrete_symplectic(const SmoothTestFn& f, const Variation& u,
                           const Variation& v, int n);

/// -(1/4) int_0^1 [ (u'v'' - v'u'')/f'^2 - (u'v - v'u) ] dt.
double continuum_symplectic(const SmoothTestFn& f, const Variation& u,
                            const Variation& v);

/// Gelfand-Fuchs form of h = g.f evaluated on two variations of f:
/// -(1/4) int [ w_u d/dt w_v - w_v d/dt w_u ] with w = (delta h)'/h'.
double gf_form_composed(const SmoothTestFn& g, const SmoothTestFn& f,
                        const Variation& u, const Variation& v);

/// omega_GF[g.f](u,v) - omega_GF[f](u,v) + (1/2) int (u'v - v'u) S[g, f] dt.
/// Vanishes when (g''/g')(f(t)) is periodic (e.g. g = exp(alpha f)).
double gf_change_of_variables_residual(const SmoothTestFn& g,
                                       const SmoothTestFn& f,
                                       const Variation& u, const Variation& v);

/// Richardson limit of sum_i [log(z_{i+1} - z_{i-1}) - log(2 eps)
/// - log f'(t_i)] / eps for f: [0,1] -> [0,1]; converges to
/// (1/6) int f'''/f', with no (f')^2 term. The subtraction is termwise:
/// the integral form differs by non-periodic boundary terms.
double disc_continuum_coefficient(const SmoothTestFn& f, std::span<const int> grid_sizes);

// Test-function factories.
SmoothTestFn linear_diffeo(double P);                     // P t
SmoothTestFn sine_diffeo(double P, double amplitude);     // P t + a sin 2 pi t
SmoothTestFn identity_map();
SmoothTestFn exp_map(double alpha);                       // e^{alpha x}
SmoothTestFn moebius_exp_map(double a, double b, double c, double d, double alpha);
SmoothTestFn crown_x_map(double P);  // sinh(x/2)/sinh(P/2 - x/2) on (0, P)
SmoothTestFn disc_sine_fn(double amplitude);              // t + a sin^2(pi t)
Variation sine_variation(int k);                          // sin 2 pi k t
Variation cosine_variation(int k);                        // cos 2 pi k t

} // namespace crownvol
