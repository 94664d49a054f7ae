#include "crownvol/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace crownvol {

SkewForm x_bracket_matrix(const XCoords& xc) {
    const int m = static_cast<int>(xc.x.size());
    SkewForm f(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            f.set_upper(i, j, xc.x[i] * (xc.x[j] - xc.x[i]));
    return f;
}

namespace {

double pf_recursive(const std::vector<double>& a, const std::vector<int>& idx, int dim) {
    const int m = static_cast<int>(idx.size());
    if (m == 0) return 1.0;
    if (m == 2) return a[static_cast<std::size_t>(idx[0]) * dim + idx[1]];
    double acc = 0.0;
    double sign = 1.0;
    for (int j = 1; j < m; ++j) {
        double aj = a[static_cast<std::size_t>(idx[0]) * dim + idx[j]];
        if (aj != 0.0) {
            std::vector<int> rest;
            rest.reserve(m - 2);
            for (int k = 1; k < m; ++k)
                if (k != j) rest.push_back(idx[k]);
            acc += sign * aj * pf_recursive(a, rest, dim);
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

double pfaffian(const SkewForm& m) {
    if (m.dim % 2 != 0)
        throw std::invalid_argument("pfaffian: odd dimension");
    if (m.dim > 8)
        throw std::invalid_argument("pfaffian: recursive expansion limited to dim <= 8");
    std::vector<int> idx(m.dim);
    for (int i = 0; i < m.dim; ++i) idx[i] = i;
    return pf_recursive(m.a, idx, m.dim);
}

double determinant(const SkewForm& m) {
    const int n = m.dim;
    std::vector<double> a = m.a;
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[static_cast<std::size_t>(r) * n + c]) >
                std::abs(a[static_cast<std::size_t>(p) * n + c]))
                p = r;
        double piv = a[static_cast<std::size_t>(p) * n + c];
        if (piv == 0.0) return 0.0;
        if (p != c) {
            for (int k = 0; k < n; ++k)
                std::swap(a[static_cast<std::size_t>(p) * n + k],
                          a[static_cast<std::size_t>(c) * n + k]);
            det = -det;
        }
        det *= piv;
        for (int r = c + 1; r < n; ++r) {
            double f = a[static_cast<std::size_t>(r) * n + c] / piv;
            if (f == 0.0) continue;
            for (int k = c; k < n; ++k)
                a[static_cast<std::size_t>(r) * n + k] -=
                    f * a[static_cast<std::size_t>(c) * n + k];
        }
    }
    return det;
}

double pfaffian_closed_form(const XCoords& xc) {
    const int m = static_cast<int>(xc.x.size());
    if (m % 2 != 0)
        throw std::invalid_argument("pfaffian_closed_form: needs odd cusp count (even matrix)");
    double v = xc.x[0];
    for (int i = 1; i < m; ++i) v *= (xc.x[i] - xc.x[i - 1]);
    return v;
}

double crown_measure_density_delta(const DeltaGaps& g) {
    g.validate();
    // sinh(P/2)/prod sinh(delta_i/2) in log form to dodge overflow
    double acc = std::log(std::sinh(0.5 * g.perimeter()));
    for (double d : g.delta) acc -= std::log(std::sinh(0.5 * d));
    return std::exp(acc);
}

SkewForm ones_upper_matrix(int m) {
    SkewForm f(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) f.set_upper(i, j, 1.0);
    return f;
}

SkewForm inverse_ones_matrix(int m) {
    if (m % 2 != 0)
        throw std::invalid_argument("inverse_ones_matrix: even size required");
    SkewForm f(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            f.set_upper(i, j, ((i + j) % 2 == 0) ? 1.0 : -1.0);  // (-1)^{i+j}, 1-based
    return f;
}

double symplectic_eval(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("symplectic_eval: length mismatch");
    const int m = static_cast<int>(u.size());
    // sum_{i<j} (-1)^{i+j}(u_i v_j - v_i u_j) via alternating prefix sums.
    double pu = 0.0, pv = 0.0, acc = 0.0;
    for (int j = 0; j < m; ++j) {
        double sj = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}, 1-based
        acc += sj * (pu * v[j] - pv * u[j]);
        pu += sj * u[j];
        pv += sj * v[j];
    }
    return acc;
}

double xi_bracket_transform_check(const XCoords& xc) {
    const int m = static_cast<int>(xc.x.size());
    auto pi = [&](int a, int b) -> double {  // {x_a, x_b}, 0-based, a may equal -1 (x_0 = 0)
        if (a < 0 || b < 0 || a == b) return 0.0;
        if (a < b) return xc.x[a] * (xc.x[b] - xc.x[a]);
        return -xc.x[b] * (xc.x[a] - xc.x[b]);
    };
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        double xi_i = xc.x[i] - (i > 0 ? xc.x[i - 1] : 0.0);
        for (int j = i + 1; j < m; ++j) {
            double xi_j = xc.x[j] - (j > 0 ? xc.x[j - 1] : 0.0);
            // {xi_i, xi_j} with xi = difference of neighbours, bilinear expansion
            double br = pi(i, j) - pi(i, j - 1) - pi(i - 1, j) + pi(i - 1, j - 1);
            worst = std::max(worst, std::abs(br - xi_i * xi_j) / std::abs(xi_i * xi_j));
        }
    }
    return worst;
}

double casimir_crown(const XiCoords& xi) {
    const int m = static_cast<int>(xi.xi.size());
    if (m % 2 == 0)
        throw std::invalid_argument("casimir_crown: Casimir exists for even cusp count only");
    double v = 1.0;
    for (int i = 0; i < m; ++i)
        v = (i % 2 == 0) ? v * xi.xi[i] : v / xi.xi[i];
    return v;
}

int casimir_bracket_residual(const XiCoords& xi) {
    const int m = static_cast<int>(xi.xi.size());
    if (m % 2 == 0)
        throw std::invalid_argument("casimir_bracket_residual: even cusp count required");
    int worst = 0;
    for (int k = 1; k <= m; ++k) {
        int acc = 0;
        for (int i = 1; i <= m; ++i) {
            int sgn = (k > i) ? 1 : (k < i ? -1 : 0);
            acc += (i % 2 == 1) ? sgn : -sgn;
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

double dh_consistency(int n) {
    if (n % 2 == 0)
        throw std::invalid_argument("dh_consistency: odd cusp count required");
    double pf = pfaffian(inverse_ones_matrix(n - 1));
    return std::abs(std::abs(pf) - 1.0);
}

} // namespace crownvol
