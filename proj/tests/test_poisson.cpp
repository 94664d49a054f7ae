#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <random>

#include "crownvol/geometry.hpp"
#include "crownvol/poisson.hpp"

using namespace crownvol;

namespace {

XCoords random_x(int m, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    XCoords x;
    x.x.resize(m);
    double acc = 0.0;
    for (auto& v : x.x) {
        acc += uni(gen);
        v = acc;
    }
    return x;
}

SkewForm random_skew(int m, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SkewForm f(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) f.set_upper(i, j, uni(gen));
    return f;
}

} // namespace

TEST_CASE("pfaffian basics") {
    SkewForm two(2);
    two.set_upper(0, 1, 3.5);
    CHECK(pfaffian(two) == 3.5);

    // block diagonal of 2x2 blocks (a, b) -> ab
    SkewForm four(4);
    four.set_upper(0, 1, 2.0);
    four.set_upper(2, 3, -1.5);
    CHECK(pfaffian(four) == doctest::Approx(-3.0).epsilon(1e-15));

    SkewForm odd(3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
    SkewForm big(10);  // recursion is capped at dim 8
    CHECK_THROWS_AS(pfaffian(big), std::invalid_argument);

    std::mt19937_64 gen(5);
    for (int m : {4, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            auto f = random_skew(m, gen);
            double pf = pfaffian(f);
            CHECK(pf * pf == doctest::Approx(determinant(f)).epsilon(1e-10));
        }
    }
}

TEST_CASE("x-bracket matrix and closed-form Pfaffian") {
    XCoords x12{{1.0, 2.0}};
    auto m = x_bracket_matrix(x12);
    CHECK(m.at(0, 1) == 1.0);
    CHECK(m.at(1, 0) == -1.0);

    // degenerate x_1 = x_2 kills the Pfaffian
    XCoords deg{{1.0, 1.0}};
    CHECK(pfaffian(x_bracket_matrix(deg)) == 0.0);

    XCoords x13{{1.0, 3.0}};
    CHECK(pfaffian_closed_form(x13) == doctest::Approx(2.0));

    std::mt19937_64 gen(7);
    for (int n : {5, 7}) {
        for (int rep = 0; rep < 50; ++rep) {
            auto x = random_x(n - 1, gen);
            double a = pfaffian(x_bracket_matrix(x));
            double b = pfaffian_closed_form(x);
            CHECK(a == doctest::Approx(b).epsilon(1e-10));
        }
    }

    // vanishes linearly as x_i -> x_{i-1}: finite-difference slope check
    XCoords base{{0.5, 1.3, 1.3, 2.0}};
    const int i = 2;
    double h = 1e-6;
    auto up = base, dn = base;
    up.x[i] += h;
    dn.x[i] -= h;
    double slope = (pfaffian_closed_form(up) - pfaffian_closed_form(dn)) / (2 * h);
    double expect = base.x[0];
    for (int j = 1; j < 4; ++j)
        if (j != i) expect *= (base.x[j] - base.x[j - 1]);
    CHECK(slope == doctest::Approx(expect).epsilon(1e-7));

    CHECK_THROWS_AS(pfaffian_closed_form(XCoords{{1.0, 2.0, 3.0}}), std::invalid_argument);
}

TEST_CASE("Jacobi identity of the x-bracket") {
    // J_ijk = sum_a [ pi_ia d_a pi_jk + pi_ja d_a pi_ki + pi_ka d_a pi_ij ] = 0,
    // with exact partials of pi_ab = x_a (x_b - x_a) (a < b).
    std::mt19937_64 gen(11);
    for (int m : {3, 4, 6}) {
        auto xc = random_x(m, gen);
        const auto& x = xc.x;
        auto pi = [&](int a, int b) -> double {
            if (a == b) return 0.0;
            return a < b ? x[a] * (x[b] - x[a]) : -x[b] * (x[a] - x[b]);
        };
        auto dpi_upper = [&](int a, int b, int c) -> double {  // a < b
            double v = 0.0;
            if (c == a) v += x[b] - 2.0 * x[a];
            if (c == b) v += x[a];
            return v;
        };
        auto dpi = [&](int a, int b, int c) -> double {  // d pi_ab / d x_c
            if (a == b) return 0.0;
            return a < b ? dpi_upper(a, b, c) : -dpi_upper(b, a, c);
        };
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    double J = 0.0;
                    for (int a = 0; a < m; ++a)
                        J += pi(i, a) * dpi(j, k, a) + pi(j, a) * dpi(k, i, a) +
                             pi(k, a) * dpi(i, j, a);
                    worst = std::max(worst, std::abs(J));
                }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("measure density in delta coordinates") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> uni(0.1, 1.1);
    for (int n : {3, 5, 7}) {
        double P = 1.7;
        std::vector<double> gaps(n);
        double tot = 0.0;
        for (auto& g : gaps) {
            g = uni(gen);
            tot += g;
        }
        CrownConfig c;
        c.perimeter = P;
        double acc = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            acc += gaps[i] * P / tot;
            c.cusp_pos.push_back(acc);
        }
        auto g = gaps_from_config(c);
        double lhs = crown_measure_density_delta(g);

        // chain rule through x(Delta): 2^{n-1} * prod dx/dDelta / Pf
        auto x = x_from_delta(c);
        double jac = 1.0;
        for (double D : c.cusp_pos) {
            double s = std::sinh(0.5 * (P - D));
            jac *= 0.5 * std::sinh(0.5 * P) / (s * s);
        }
        double rhs = std::ldexp(jac / pfaffian_closed_form(x), n - 1);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

        // cyclic rotation invariance
        DeltaGaps rot = g;
        std::rotate(rot.delta.begin(), rot.delta.begin() + 1, rot.delta.end());
        CHECK(crown_measure_density_delta(rot) == doctest::Approx(lhs).epsilon(1e-12));
    }
}

TEST_CASE("inverse of the ones matrix") {
    for (int m = 2; m <= 10; m += 2) {
        auto A = ones_upper_matrix(m);
        auto B = inverse_ones_matrix(m);
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double v = 0.0;
                for (int k = 0; k < m; ++k) v += A.at(i, k) * B.at(k, j);
                worst = std::max(worst, std::abs(v - (i == j ? 1.0 : 0.0)));
            }
        CHECK(worst <= 1e-14);
    }

    CHECK(inverse_ones_matrix(2).at(0, 1) == -1.0);

    // |Pf(B)| = 1 with the alternating sign (-1)^{m/2}
    for (int m : {2, 4, 6}) {
        double pf = pfaffian(inverse_ones_matrix(m));
        CHECK(std::abs(pf) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(pf == doctest::Approx((m / 2) % 2 == 0 ? 1.0 : -1.0));
    }

    CHECK_THROWS_AS(inverse_ones_matrix(3), std::invalid_argument);
}

TEST_CASE("symplectic pairing") {
    std::vector<double> e1{1.0, 0.0}, e2{0.0, 1.0};
    CHECK(symplectic_eval(e1, e2) == -1.0);

    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int m : {2, 4, 6}) {
        std::vector<double> u(m), v(m);
        for (auto& t : u) t = uni(gen);
        for (auto& t : v) t = uni(gen);
        CHECK(symplectic_eval(u, v) == doctest::Approx(-symplectic_eval(v, u)).epsilon(1e-14));

        // direct double-sum cross-check of the prefix evaluation
        double direct = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{i+j}, 1-based
                direct += sgn * (u[i] * v[j] - v[i] * u[j]);
            }
        CHECK(symplectic_eval(u, v) == doctest::Approx(direct).epsilon(1e-13));
    }
    std::vector<double> short1{1.0};
    CHECK_THROWS_AS(symplectic_eval(e1, short1), std::invalid_argument);
}

TEST_CASE("xi bracket transform") {
    std::mt19937_64 gen(19);
    for (int n : {3, 5, 7}) {
        auto x = random_x(n - 1, gen);
        CHECK(xi_bracket_transform_check(x) <= (n == 3 ? 1e-13 : 1e-12));
        // homogeneity: scaling x leaves the relative residual unchanged in size
        XCoords scaled = x;
        for (auto& v : scaled.x) v *= 37.0;
        CHECK(xi_bracket_transform_check(scaled) <= 1e-12);
    }
}

TEST_CASE("Casimir for even cusp count") {
    XiCoords ones{{1.0, 1.0, 1.0}};
    CHECK(casimir_crown(ones) == 1.0);
    CHECK(casimir_bracket_residual(ones) == 0);

    // n=4, k=2 alternating sum: sgn(2-1) - sgn(2-2) + sgn(2-3) = 1 + 0 - 1
    int acc = 0;
    for (int i = 1; i <= 3; ++i) {
        int sgn = (2 > i) ? 1 : (2 < i ? -1 : 0);
        acc += (i % 2 == 1) ? sgn : -sgn;
    }
    CHECK(acc == 0);

    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> uni(0.1, 2.0);
    for (int n : {6, 8, 10}) {
        XiCoords xi;
        xi.xi.resize(n - 1);
        for (auto& v : xi.xi) v = uni(gen);
        CHECK(casimir_bracket_residual(xi) == 0);
        CHECK(casimir_crown(xi) > 0.0);
    }

    XiCoords even{{1.0, 2.0}};  // n = 3: no Casimir
    CHECK_THROWS_AS(casimir_crown(even), std::invalid_argument);
}

TEST_CASE("Duistermaat-Heckman density") {
    CHECK(dh_consistency(3) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(dh_consistency(5) <= 1e-14);
    CHECK(dh_consistency(7) <= 1e-13);
    CHECK_THROWS_AS(dh_consistency(4), std::invalid_argument);
}
