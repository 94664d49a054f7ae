#include "crownvol/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "crownvol/continuum.hpp"
#include "crownvol/geometry.hpp"
#include "crownvol/poisson.hpp"
#include "crownvol/quadrature.hpp"
#include "crownvol/rng.hpp"
#include "crownvol/specfun.hpp"

namespace crownvol {

namespace {

void add(std::vector<CheckResult>& out, std::string name, double residual,
         double tol) {
    out.push_back({std::move(name), residual, tol, std::abs(residual) <= tol});
}

// Random configuration with gaps bounded away from zero.
CrownConfig random_config(int n, double P, BlockRng& rng) {
    std::vector<double> gaps(n);
    double tot = 0.0;
    for (auto& g : gaps) {
        g = 0.1 + rng.uniform();
        tot += g;
    }
    CrownConfig c;
    c.perimeter = P;
    double acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        acc += gaps[i] * P / tot;
        c.cusp_pos.push_back(acc);
    }
    return c;
}

} // namespace

std::vector<CheckResult> check_specfun(std::uint64_t seed) {
    std::vector<CheckResult> out;
    BlockRng rng(seed, 0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        double x = 0.01 + 0.98 * rng.uniform();
        double y = 0.01 + 0.98 * rng.uniform();
        worst = std::max(worst, std::abs(five_term_residual(x, y)));
    }
    add(out, "five-term relation, 100 random pairs", worst, 1e-12);
    for (double P : {0.1, 1.0, 10.0})
        add(out, "two-term relation at P=" + std::to_string(P), two_term_residual(P), 1e-10);
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    add(out, "dilog(1) = pi^2/6", dilog(1.0) - pi2 / 6.0, 1e-14);
    add(out, "dilog_re continuity at 1+", dilog_re(1.0 + 1e-13) - pi2 / 6.0, 1e-11);
    return out;
}

std::vector<CheckResult> check_poisson(std::uint64_t seed) {
    std::vector<CheckResult> out;
    BlockRng rng(seed, 1);
    for (int n : {3, 5, 7}) {
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            XCoords x;
            x.x.resize(n - 1);
            double acc = 0.0;
            for (auto& xi : x.x) {
                acc += 0.05 + rng.uniform();
                xi = acc;
            }
            worst = std::max(worst,
                             std::abs(pfaffian(x_bracket_matrix(x)) / pfaffian_closed_form(x) - 1.0));
        }
        add(out, "Pfaffian closed form, n=" + std::to_string(n), worst, 1e-10);
    }
    for (int n : {3, 5, 7}) {
        XCoords x;
        x.x.resize(n - 1);
        double acc = 0.0;
        for (auto& xi : x.x) {
            acc += 0.05 + rng.uniform();
            xi = acc;
        }
        add(out, "xi bracket transform, n=" + std::to_string(n),
            xi_bracket_transform_check(x), 1e-12);
    }
    for (int n : {4, 6, 8}) {
        XiCoords xi;
        xi.xi.assign(n - 1, 1.0);
        add(out, "Casimir bracket residual, n=" + std::to_string(n),
            static_cast<double>(casimir_bracket_residual(xi)), 0.0);
    }
    for (int m : {2, 4, 6, 8}) {
        auto A = ones_upper_matrix(m);
        auto B = inverse_ones_matrix(m);
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double v = 0.0;
                for (int k = 0; k < m; ++k) v += A.at(i, k) * B.at(k, j);
                worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
        add(out, "A * A^{-1} = I, size " + std::to_string(m), worst, 1e-14);
    }
    for (int n : {3, 5, 7})
        add(out, "Duistermaat-Heckman density, n=" + std::to_string(n),
            dh_consistency(n), 1e-13);
    return out;
}

std::vector<CheckResult> check_geometry(std::uint64_t seed) {
    std::vector<CheckResult> out;
    BlockRng rng(seed, 2);
    for (int n : {3, 5, 7}) {
        double P = 1.0 + 2.0 * rng.uniform();
        auto c = random_config(n, P, rng);
        auto radii = kissing_radii(c);
        // defining kissing relations
        double worst = 0.0;
        double prev_pos = 0.0;
        for (int i = 1; i <= n; ++i) {
            double pos = (i < n) ? c.cusp_pos[i - 1] : P;
            double lhs = 2.0 * std::sqrt(radii.r[i - 1] *
                                         (i < n ? radii.r[i] : radii.r[0] * std::exp(P)));
            double rhs = std::exp(pos) - std::exp(prev_pos);
            worst = std::max(worst, std::abs(lhs / rhs - 1.0));
            prev_pos = pos;
        }
        add(out, "kissing relations, n=" + std::to_string(n), worst, 1e-12);
        add(out, "action two-path, n=" + std::to_string(n),
            action_from_geometry(c, 1.0) / crown_action(gaps_from_config(c), 1.0) - 1.0,
            1e-10);
    }
    {
        // shear chain round trip at n = 3 and 5 (mu_n = 1 convention);
        // crown_action = shear_action + kappa P/2 (perimeter normalization).
        for (int n : {3, 5}) {
            double P = 1.5;
            ShearCoords s;
            s.perimeter = P;
            s.y.resize(n);
            double acc = 0.0;
            for (int i = 1; i < n; ++i) {
                s.y[i] = rng.uniform() - 0.3;
                acc += s.y[i];
            }
            s.y[0] = P - acc;
            auto xi = xi_from_shear(s);
            auto cfg = delta_from_x(x_from_xi(xi), P);
            double lhs = crown_action(gaps_from_config(cfg), 1.0);
            double rhs = shear_action(s, 1.0) + 0.5 * P;
            add(out, "shear chain round trip, n=" + std::to_string(n), lhs / rhs - 1.0,
                1e-9);
        }
    }
    {
        // x <-> Delta round trip
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            double P = 0.5 + 3.0 * rng.uniform();
            auto c = random_config(5, P, rng);
            auto back = delta_from_x(x_from_delta(c), P);
            for (std::size_t i = 0; i < c.cusp_pos.size(); ++i)
                worst = std::max(worst, std::abs(back.cusp_pos[i] - c.cusp_pos[i]));
        }
        add(out, "x <-> Delta round trip, 100 configs", worst, 1e-12);
    }
    return out;
}

std::vector<CheckResult> check_continuum() {
    std::vector<CheckResult> out;
    auto f = sine_diffeo(1.0, 0.1);
    auto g = exp_map(1.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k)
        worst = std::max(worst, std::abs(cocycle_residual(g, f, k / 100.0)));
    add(out, "Schwarzian cocycle, g=exp", worst, 1e-10);
    for (double alpha : {1.0, 2.0}) {
        double r = 0.0;
        for (double t : {0.1, 0.4, 0.7})
            r = std::max(r, std::abs(moebius_exp_schwarzian_residual(0.7, -0.2, 0.3, 1.1,
                                                                     alpha, f, t)));
        add(out, "Moebius-exp Schwarzian constant, alpha=" + std::to_string(alpha), r, 1e-8);
    }
    {
        auto crown = crown_x_map(4.0);
        double r = 0.0;
        for (double t : {0.2, 0.5, 0.8}) {
            double x = f.f(t);
            r = std::max(r, std::abs(schwarzian_from_derivs(crown.d1(x), crown.d2(x),
                                                            crown.d3(x)) +
                                     0.5));
        }
        add(out, "crown map Schwarzian = -1/2", r, 1e-8);
    }
    add(out, "Hill identity", hill_identity_residual(f), 1e-8);
    {
        double t = 0.1;
        double est = cross_ratio_schwarzian(f, t, 2000);
        double ref = schwarzian(f, t + 1.5 / 2000.0);
        add(out, "cross-ratio Schwarzian, n=2000", est / ref - 1.0, 0.05);
    }
    {
        const std::array<int, 2> ns = {2001, 4001};
        double coeff = action_expansion_coefficient(f, ns);
        double target = integrate_gl2048(
            [&](double t) { return (f.d3(t) / f.d1(t) + f.d1(t) * f.d1(t)) / 6.0; }, 0.0,
            1.0);
        add(out, "crown action expansion coefficient", coeff / target - 1.0, 0.02);
    }
    {
        auto u = sine_variation(1);
        auto v = cosine_variation(1);
        double cont = continuum_symplectic(f, u, v);
        double prev = 0.0;
        bool monotone = true;
        double rel2001 = 0.0;
        for (int n : {501, 1001, 2001}) {
            double rel = std::abs(discrete_symplectic(f, u, v, n) / cont - 1.0);
            if (n > 501 && rel > prev) monotone = false;
            prev = rel;
            if (n == 2001) rel2001 = rel;
        }
        add(out, "symplectic continuum limit, n=2001", rel2001, 0.05);
        add(out, "symplectic convergence monotone over {501,1001,2001}",
            monotone ? 0.0 : 1.0, 0.0);
        add(out, "Gelfand-Fuchs change of variables, g=exp",
            gf_change_of_variables_residual(g, f, u, v), 1e-6);
    }
    {
        const std::array<int, 2> ns = {2001, 4001};
        auto fd = disc_sine_fn(0.05);
        double coeff = disc_continuum_coefficient(fd, ns);
        double target = integrate_gl2048(
            [&](double t) { return fd.d3(t) / fd.d1(t) / 6.0; }, 0.0, 1.0);
        add(out, "disc expansion coefficient (no f'^2 term)", coeff / target - 1.0, 0.03);
    }
    return out;
}

std::vector<CheckResult> check_all(std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (auto&& r : check_specfun(seed)) out.push_back(std::move(r));
    for (auto&& r : check_poisson(seed)) out.push_back(std::move(r));
    for (auto&& r : check_geometry(seed)) out.push_back(std::move(r));
    for (auto&& r : check_continuum()) out.push_back(std::move(r));
    return out;
}

} // namespace crownvol
