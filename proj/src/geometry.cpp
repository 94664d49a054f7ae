#include "crownvol/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace crownvol {

namespace {

double sum_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

} // namespace

void CrownConfig::validate() const {
    if (!(perimeter > 0.0))
        throw std::invalid_argument("CrownConfig: perimeter must be positive");
    double prev = 0.0;
    for (double d : cusp_pos) {
        if (!(d > prev))
            throw std::invalid_argument("CrownConfig: cusp positions must be strictly increasing from 0");
        prev = d;
    }
    if (!cusp_pos.empty() && !(cusp_pos.back() < perimeter))
        throw std::invalid_argument("CrownConfig: cusp positions must stay below the perimeter");
}

double DeltaGaps::perimeter() const { return sum_of(delta); }

void DeltaGaps::validate() const {
    if (delta.empty())
        throw std::invalid_argument("DeltaGaps: need at least one gap");
    for (double d : delta)
        if (!(d > 0.0))
            throw std::invalid_argument("DeltaGaps: gaps must be positive");
}

void DiscConfig::validate() const {
    if (n < 3) throw std::invalid_argument("DiscConfig: need n >= 3 cusps");
    if (static_cast<int>(z.size()) != n - 3)
        throw std::invalid_argument("DiscConfig: expected n-3 interior positions");
    double prev = 0.0;
    for (double zi : z) {
        if (!(zi > prev && zi < 1.0))
            throw std::invalid_argument("DiscConfig: interior z must be strictly increasing in (0,1)");
        prev = zi;
    }
}

double log_expm1(double a) {
    if (!(a > 0.0))
        throw std::domain_error("log_expm1: argument must be positive");
    if (a > 0.7) return a + std::log1p(-std::exp(-a));
    return std::log(std::expm1(a));
}

DeltaGaps gaps_from_config(const CrownConfig& c) {
    c.validate();
    DeltaGaps g;
    g.delta.reserve(c.cusp_count());
    double prev = 0.0;
    for (double d : c.cusp_pos) {
        g.delta.push_back(d - prev);
        prev = d;
    }
    g.delta.push_back(c.perimeter - prev);
    return g;
}

CrownConfig config_from_gaps(const DeltaGaps& g) {
    g.validate();
    CrownConfig c;
    c.perimeter = g.perimeter();
    c.cusp_pos.reserve(g.delta.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < g.delta.size(); ++i) {
        acc += g.delta[i];
        c.cusp_pos.push_back(acc);
    }
    return c;
}

double crown_action(const DeltaGaps& g, double kappa) {
    g.validate();
    const int n = g.cusp_count();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        s += log_expm1(g.delta[i] + g.delta[(i + 1) % n]) - log_expm1(g.delta[i]);
    return kappa * s;
}

HoroRadii kissing_radii(const CrownConfig& c) {
    c.validate();
    const int n = c.cusp_count();
    if (n % 2 == 0)
        throw std::invalid_argument("kissing_radii: no kissing configuration for even n in general");
    const double P = c.perimeter;

    // In rho = log r the conditions read rho_{i-1} + rho_i = b_i with
    //   b_i = 2 log((e^{Delta_i} - e^{Delta_{i-1}})/2),  i = 1..n-1,
    //   b_n = 2 log((e^P - e^{Delta_{n-1}})/2) - P       (r_n = r_0 e^P).
    std::vector<double> b(n);
    double prev = 0.0;
    for (int i = 1; i < n; ++i) {
        // log(e^D - e^d) = d + log(e^{D-d} - 1), cancellation-free
        b[i - 1] = 2.0 * (prev + log_expm1(c.cusp_pos[i - 1] - prev) - std::numbers::ln2);
        prev = c.cusp_pos[i - 1];
    }
    b[n - 1] = 2.0 * (prev + log_expm1(P - prev) - std::numbers::ln2) - P;

    // Alternating elimination around the cycle: 2 rho_0 = b_1 - b_2 + ... + b_n.
    double rho0 = 0.0;
    for (int i = 0; i < n; ++i) rho0 += (i % 2 == 0 ? b[i] : -b[i]);
    rho0 *= 0.5;

    HoroRadii out;
    out.perimeter = P;
    out.r.resize(n);
    double rho = rho0;
    out.r[0] = std::exp(rho);
    for (int i = 1; i < n; ++i) {
        rho = b[i - 1] - rho;
        out.r[i] = std::exp(rho);
    }
    return out;
}

std::vector<double> s_lengths(const CrownConfig& c, const HoroRadii& radii) {
    c.validate();
    const int n = c.cusp_count();
    if (static_cast<int>(radii.r.size()) != n)
        throw std::invalid_argument("s_lengths: radii size mismatch");
    const double P = c.perimeter;

    // Quasiperiodic continuation Delta_{k+n} = Delta_k + P, r_{k+n} = r_k e^P.
    auto Delta = [&](int k) {
        int q = k / n, m = k % n;
        return (m == 0 ? 0.0 : c.cusp_pos[m - 1]) + q * P;
    };
    auto rad = [&](int k) { return radii.r[k % n] * std::exp((k / n) * P); };

    std::vector<double> s(n);
    for (int i = 1; i <= n; ++i)
        s[i - 1] = (std::exp(Delta(i + 1)) - std::exp(Delta(i - 1))) /
                   (2.0 * std::sqrt(rad(i - 1) * rad(i + 1)));
    return s;
}

double action_from_geometry(const CrownConfig& c, double kappa) {
    auto s = s_lengths(c, kissing_radii(c));
    double acc = 0.0;
    for (double si : s) acc += std::log(si);
    return kappa * (0.5 * c.perimeter + acc);
}

XCoords x_from_delta(const CrownConfig& c) {
    c.validate();
    XCoords out;
    out.x.reserve(c.cusp_pos.size());
    const double hp = 0.5 * c.perimeter;
    for (double d : c.cusp_pos)
        out.x.push_back(std::sinh(0.5 * d) / std::sinh(hp - 0.5 * d));
    return out;
}

CrownConfig delta_from_x(const XCoords& xc, double P) {
    CrownConfig c;
    c.perimeter = P;
    c.cusp_pos.reserve(xc.x.size());
    const double ehp = std::exp(0.5 * P);
    for (double x : xc.x) {
        if (!(x > 0.0))
            throw std::invalid_argument("delta_from_x: x must be positive");
        // e^Delta = (x e^P + e^{P/2}) / (x + e^{P/2})
        c.cusp_pos.push_back(std::log((x * std::exp(P) + ehp) / (x + ehp)));
    }
    c.validate();
    return c;
}

XiCoords xi_from_x(const XCoords& xc) {
    XiCoords out;
    out.xi.reserve(xc.x.size());
    double prev = 0.0;
    for (double x : xc.x) {
        out.xi.push_back(x - prev);
        prev = x;
    }
    return out;
}

XCoords x_from_xi(const XiCoords& xi) {
    XCoords out;
    out.x.reserve(xi.xi.size());
    double acc = 0.0;
    for (double v : xi.xi) {
        acc += v;
        out.x.push_back(acc);
    }
    return out;
}

double shear_action(const ShearCoords& s, double kappa) {
    double tot = sum_of(s.y);
    if (std::abs(tot - s.perimeter) > 1e-9)
        throw std::invalid_argument("shear_action: sum of shear coordinates must equal the perimeter");
    double acc = 0.0;
    for (double y : s.y)
        acc += 0.5 * std::abs(y) + std::log1p(std::exp(-std::abs(y)));  // log(2 cosh(y/2))
    return kappa * acc;
}

XiCoords xi_from_shear(const ShearCoords& s) {
    const int n = static_cast<int>(s.y.size());
    if (n < 2) throw std::invalid_argument("xi_from_shear: need n >= 2");
    if (std::abs(sum_of(s.y) - s.perimeter) > 1e-9)
        throw std::invalid_argument("xi_from_shear: sum of shear coordinates must equal the perimeter");
    const auto& y = s.y;

    // mu_i = e^{-(y_{i+1}+...+y_n)/2} (1 + e^{y_{i+1}} + ... + e^{y_{i+1}+...+y_n}),
    // computed in log form; mu_n = 1 by the empty-sum convention.
    std::vector<double> log_mu(n + 1);
    log_mu[n] = 0.0;
    for (int i = 1; i < n; ++i) {
        double tail = 0.0, acc = 0.0, c = 0.0;
        double m = 0.0;  // running max exponent for a stable log-sum-exp
        std::vector<double> exps;
        exps.push_back(0.0);
        for (int k = i; k < n; ++k) {  // y_{i+1}..y_n are y[i]..y[n-1]
            c += y[k];
            exps.push_back(c);
            tail += y[k];
        }
        for (double e : exps) m = std::max(m, e);
        for (double e : exps) acc += std::exp(e - m);
        log_mu[i] = -0.5 * tail + m + std::log(acc);
    }

    double tail_all = 0.0;
    for (int k = 1; k < n; ++k) tail_all += y[k];
    const double log_pref = 0.5 * (s.perimeter - tail_all);  // = y_1/2 on the constraint

    XiCoords out;
    out.xi.reserve(n - 1);
    for (int i = 1; i < n; ++i)
        out.xi.push_back(std::exp(log_pref + log_mu[1] - log_mu[i] - log_mu[i + 1] - 0.5 * y[i]));
    return out;
}

namespace {

// Full z-array z_1..z_{n-1} with the gauge-fixed entries.
std::vector<double> disc_full_z(const DiscConfig& d) {
    std::vector<double> z;
    z.reserve(d.n - 1);
    z.push_back(0.0);
    for (double zi : d.z) z.push_back(zi);
    z.push_back(1.0);
    return z;
}

} // namespace

double disc_action(const DiscConfig& d) {
    d.validate();
    if (d.n < 4) throw std::invalid_argument("disc_action: need n >= 4");
    auto z = disc_full_z(d);  // z[k] = z_{k+1}
    auto at = [&](int i) { return z[i - 1]; };
    const int n = d.n;

    double num = std::log(at(3));  // z_3 (= 1 for n = 4)
    for (int i = 4; i <= n - 2; ++i) num += std::log(at(i) - at(i - 2));
    num += std::log1p(-at(n - 3));

    double den = std::log(at(2));
    for (int i = 3; i <= n - 2; ++i) den += std::log(at(i) - at(i - 1));
    den += std::log1p(-at(n - 2));

    return num - den;
}

double disc_measure_density(const DiscConfig& d) {
    d.validate();
    if (d.n < 4) throw std::invalid_argument("disc_measure_density: need n >= 4");
    auto z = disc_full_z(d);
    auto at = [&](int i) { return z[i - 1]; };
    const int n = d.n;
    double acc = std::log(at(2));
    for (int i = 3; i <= n - 2; ++i) acc += std::log(at(i) - at(i - 1));
    acc += std::log1p(-at(n - 2));
    return std::exp(-acc);
}

} // namespace crownvol
