#include "crownvol/continuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "crownvol/geometry.hpp"
#include "crownvol/poisson.hpp"
#include "crownvol/quadrature.hpp"

namespace crownvol {

double schwarzian_from_derivs(double d1, double d2, double d3) {
    double r = d2 / d1;
    return d3 / d1 - 1.5 * r * r;
}

double schwarzian(const SmoothTestFn& fn, double t) {
    return schwarzian_from_derivs(fn.d1(t), fn.d2(t), fn.d3(t));
}

double cocycle_residual(const SmoothTestFn& g, const SmoothTestFn& f, double t) {
    const double f1 = f.d1(t), f2 = f.d2(t), f3 = f.d3(t);
    const double w = f.f(t);
    const double g1 = g.d1(w), g2 = g.d2(w), g3 = g.d3(w);
    // chain rule for (g.f)', (g.f)'', (g.f)'''
    const double h1 = g1 * f1;
    const double h2 = g2 * f1 * f1 + g1 * f2;
    const double h3 = g3 * f1 * f1 * f1 + 3.0 * g2 * f1 * f2 + g1 * f3;
    return schwarzian_from_derivs(h1, h2, h3) -
           f1 * f1 * schwarzian_from_derivs(g1, g2, g3) -
           schwarzian_from_derivs(f1, f2, f3);
}

double moebius_exp_schwarzian_residual(double a, double b, double c, double d,
                                       double alpha, const SmoothTestFn& f,
                                       double t) {
    if (a * d - b * c == 0.0)
        throw std::invalid_argument("moebius_exp_schwarzian_residual: degenerate map");
    SmoothTestFn g = moebius_exp_map(a, b, c, d, alpha);
    const double w = f.f(t);
    if (!std::isfinite(g.d1(w)) || g.d1(w) == 0.0)
        throw std::invalid_argument("moebius_exp_schwarzian_residual: pole at the test point");
    return schwarzian_from_derivs(g.d1(w), g.d2(w), g.d3(w)) + 0.5 * alpha * alpha;
}

DiffeoGrid diffeo_grid(const SmoothTestFn& f, int n) {
    if (n < 1) throw std::invalid_argument("diffeo_grid: n >= 1");
    DiffeoGrid g;
    g.n = n;
    const double f0 = f.f(0.0);
    g.perimeter = f.f(1.0) - f0;
    g.delta_pos.resize(n);
    for (int i = 1; i <= n; ++i)
        g.delta_pos[i - 1] = f.f(static_cast<double>(i) / n) - f0;
    return g;
}

double discrete_crown_action(const SmoothTestFn& f, int n) {
    if (n < 3) throw std::invalid_argument("discrete_crown_action: n >= 3");
    const double eps = 1.0 / n;
    double s = 0.0;
    for (int i = 1; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        s += log_expm1(f.f(t + eps) - f.f(t - eps));
    }
    return s;
}

namespace {

double expansion_R_over_eps(const SmoothTestFn& f, int n, double int_log_f1) {
    const double eps = 1.0 / n;
    const double P = f.f(1.0) - f.f(0.0);
    double R = discrete_crown_action(f, n) -
               (std::log(2.0 * eps) / eps + int_log_f1 / eps + P);
    return R / eps;
}

// c(eps) = c0 + c1 eps + O(eps^2): eliminate the linear term pairwise and
// check monotone approach when more than two sizes are supplied.
double richardson_limit(std::span<const int> ns,
                        const std::function<double(int)>& coeff) {
    if (ns.size() < 2)
        throw std::invalid_argument("richardson_limit: need at least two grid sizes");
    std::vector<double> c(ns.size()), eps(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        c[i] = coeff(ns[i]);
        eps[i] = 1.0 / ns[i];
    }
    const std::size_t k = ns.size();
    double lim = (c[k - 1] * eps[k - 2] - c[k - 2] * eps[k - 1]) / (eps[k - 2] - eps[k - 1]);
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (std::abs(c[i + 1] - lim) > std::abs(c[i] - lim) + 1e-12 * std::abs(lim))
            throw std::runtime_error("richardson_limit: non-monotone convergence");
    return lim;
}

} // namespace

double action_expansion_coefficient(const SmoothTestFn& f, std::span<const int> grid_sizes) {
    const double int_log_f1 =
        integrate_gl2048([&](double t) { return std::log(f.d1(t)); }, 0.0, 1.0);
    return richardson_limit(grid_sizes, [&](int n) {
        return expansion_R_over_eps(f, n, int_log_f1);
    });
}

double hill_identity_residual(const SmoothTestFn& f) {
    double s = integrate_gl2048([&](double t) { return schwarzian(f, t); }, 0.0, 1.0);
    double r = integrate_gl2048([&](double t) { return f.d3(t) / f.d1(t); }, 0.0, 1.0);
    return s + 0.5 * r;
}

double cross_ratio_schwarzian(const SmoothTestFn& f, double t, int n) {
    const double eps = 1.0 / n;
    const double f0 = f.f(t), f1 = f.f(t + eps), f2 = f.f(t + 2 * eps),
                 f3 = f.f(t + 3 * eps);
    const double cr = (f3 - f1) * (f2 - f0) / ((f3 - f2) * (f1 - f0));
    return (4.0 - cr) / (2.0 * eps * eps);
}

double discrete_symplectic(const SmoothTestFn& f, const Variation& u,
                           const Variation& v, int n) {
    if (n % 2 == 0) throw std::invalid_argument("discrete_symplectic: odd n required");
    if (n < 3) throw std::invalid_argument("discrete_symplectic: n >= 3");
    const double f0 = f.f(0.0);
    const double P = f.f(1.0) - f0;
    const double hp = 0.5 * P;
    const int m = n - 1;

    // x(Delta) and its derivative; Delta_i = f(t_i) - f(0) lands in (0, P).
    auto xmap = [&](double D) { return std::sinh(0.5 * D) / std::sinh(hp - 0.5 * D); };
    auto xmap1 = [&](double D) {
        double s = std::sinh(hp - 0.5 * D);
        return 0.5 * std::sinh(hp) / (s * s);
    };

    std::vector<double> a(m), b(m);
    double x_prev = 0.0, du_prev = 0.0, dv_prev = 0.0;
    for (int i = 1; i <= m; ++i) {
        double t = static_cast<double>(i) / n;
        double D = f.f(t) - f0;
        double x = xmap(D);
        double g1 = xmap1(D);
        double du = g1 * u.u(t);
        double dv = g1 * v.u(t);
        a[i - 1] = (du - du_prev) / (x - x_prev);
        b[i - 1] = (dv - dv_prev) / (x - x_prev);
        x_prev = x;
        du_prev = du;
        dv_prev = dv;
    }
    return symplectic_eval(a, b);
}

double continuum_symplectic(const SmoothTestFn& f, const Variation& u,
                            const Variation& v) {
    return -0.25 * integrate_gl2048(
                       [&](double t) {
                           double f1 = f.d1(t);
                           return (u.d1(t) * v.d2(t) - v.d1(t) * u.d2(t)) / (f1 * f1) -
                                  (u.d1(t) * v.u(t) - v.d1(t) * u.u(t));
                       },
                       0.0, 1.0);
}

double gf_form_composed(const SmoothTestFn& g, const SmoothTestFn& f,
                        const Variation& u, const Variation& v) {
    // h = g.f; delta_u h = g'(f) u; w_u = (delta_u h)'/h'.
    auto w_and_dw = [&](const Variation& var, double t, double& w, double& dw) {
        const double f1 = f.d1(t), f2 = f.d2(t);
        const double x = f.f(t);
        const double g1 = g.d1(x), g2 = g.d2(x), g3 = g.d3(x);
        const double h1 = g1 * f1;
        const double h2 = g2 * f1 * f1 + g1 * f2;
        const double uu = var.u(t), u1 = var.d1(t), u2 = var.d2(t);
        const double dh1 = g2 * f1 * uu + g1 * u1;
        const double dh2 = g3 * f1 * f1 * uu + g2 * f2 * uu + 2.0 * g2 * f1 * u1 + g1 * u2;
        w = dh1 / h1;
        dw = dh2 / h1 - dh1 * h2 / (h1 * h1);
    };
    return -0.25 * integrate_gl2048(
                       [&](double t) {
                           double wu, dwu, wv, dwv;
                           w_and_dw(u, t, wu, dwu);
                           w_and_dw(v, t, wv, dwv);
                           return wu * dwv - wv * dwu;
                       },
                       0.0, 1.0);
}

double gf_change_of_variables_residual(const SmoothTestFn& g,
                                       const SmoothTestFn& f,
                                       const Variation& u, const Variation& v) {
    const double om_h = gf_form_composed(g, f, u, v);
    const double om_f = gf_form_composed(identity_map(), f, u, v);
    const double corr =
        0.5 * integrate_gl2048(
                  [&](double t) {
                      const double x = f.f(t);
                      double s = schwarzian_from_derivs(g.d1(x), g.d2(x), g.d3(x));
                      return (u.d1(t) * v.u(t) - v.d1(t) * u.u(t)) * s;
                  },
                  0.0, 1.0);
    return om_h - om_f + corr;
}

double disc_continuum_coefficient(const SmoothTestFn& f, std::span<const int> grid_sizes) {
    auto coeff = [&](int n) {
        const double eps = 1.0 / n;
        const double l2e = std::log(2.0 * eps);
        double s = 0.0;
        for (int i = 1; i < n; ++i) {
            double t = static_cast<double>(i) / n;
            s += std::log(f.f(t + eps) - f.f(t - eps)) - l2e - std::log(f.d1(t));
        }
        return s / eps;
    };
    return richardson_limit(grid_sizes, coeff);
}

SmoothTestFn linear_diffeo(double P) {
    return {[P](double t) { return P * t; }, [P](double) { return P; },
            [](double) { return 0.0; }, [](double) { return 0.0; }, P};
}

SmoothTestFn sine_diffeo(double P, double a) {
    constexpr double w = 2.0 * std::numbers::pi;
    if (std::abs(a) * w >= P)
        throw std::invalid_argument("sine_diffeo: amplitude breaks monotonicity");
    return {[=](double t) { return P * t + a * std::sin(w * t); },
            [=](double t) { return P + a * w * std::cos(w * t); },
            [=](double t) { return -a * w * w * std::sin(w * t); },
            [=](double t) { return -a * w * w * w * std::cos(w * t); }, P};
}

SmoothTestFn identity_map() {
    return {[](double x) { return x; }, [](double) { return 1.0; },
            [](double) { return 0.0; }, [](double) { return 0.0; }, 1.0};
}

SmoothTestFn exp_map(double alpha) {
    return {[alpha](double x) { return std::exp(alpha * x); },
            [alpha](double x) { return alpha * std::exp(alpha * x); },
            [alpha](double x) { return alpha * alpha * std::exp(alpha * x); },
            [alpha](double x) { return alpha * alpha * alpha * std::exp(alpha * x); },
            0.0};
}

SmoothTestFn moebius_exp_map(double a, double b, double c, double d, double alpha) {
    const double det = a * d - b * c;
    auto den = [c, d, alpha](double x) { return c * std::exp(alpha * x) + d; };
    return {[=](double x) { return (a * std::exp(alpha * x) + b) / den(x); },
            [=](double x) {
                double E = std::exp(alpha * x), q = den(x);
                return alpha * E * det / (q * q);
            },
            [=](double x) {
                double E = std::exp(alpha * x), q = den(x);
                return alpha * alpha * E * det * (d - c * E) / (q * q * q);
            },
            [=](double x) {
                double E = std::exp(alpha * x), q = den(x);
                double cE = c * E;
                return alpha * alpha * alpha * E * det *
                       (d * d - 4.0 * cE * d + cE * cE) / (q * q * q * q);
            },
            0.0};
}

SmoothTestFn crown_x_map(double P) {
    // g(x) = sinh(x/2)/sinh(P/2 - x/2) = Moebius of e^x with a pole at x = P
    return moebius_exp_map(1.0, -1.0, -std::exp(-0.5 * P), std::exp(0.5 * P), 1.0);
}

SmoothTestFn disc_sine_fn(double a) {
    constexpr double pi = std::numbers::pi;
    if (std::abs(a) * pi >= 1.0)
        throw std::invalid_argument("disc_sine_fn: amplitude breaks monotonicity");
    auto s2 = [](double t) { return std::sin(pi * t) * std::sin(pi * t); };
    return {[=](double t) { return t + a * s2(t); },
            [=](double t) { return 1.0 + a * pi * std::sin(2.0 * pi * t); },
            [=](double t) { return 2.0 * a * pi * pi * std::cos(2.0 * pi * t); },
            [=](double t) { return -4.0 * a * pi * pi * pi * std::sin(2.0 * pi * t); },
            1.0};
}

Variation sine_variation(int k) {
    const double w = 2.0 * std::numbers::pi * k;
    return {[w](double t) { return std::sin(w * t); },
            [w](double t) { return w * std::cos(w * t); },
            [w](double t) { return -w * w * std::sin(w * t); }};
}

Variation cosine_variation(int k) {
    const double w = 2.0 * std::numbers::pi * k;
    return {[w](double t) { return std::cos(w * t); },
            [w](double t) { return -w * std::sin(w * t); },
            [w](double t) { return -w * w * std::cos(w * t); }};
}

} // namespace crownvol
