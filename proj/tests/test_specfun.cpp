#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "crownvol/specfun.hpp"

using namespace crownvol;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// Brute-force partial series oracle, independent of the implementation path;
// Kahan-compensated so the 1e6-term sum carries no accumulation error.
double series_oracle(double x, long terms) {
    double term = 1.0, sum = 0.0, comp = 0.0;
    for (long k = 1; k <= terms; ++k) {
        term *= x;
        double add = term / (static_cast<double>(k) * k) - comp;
        double next = sum + add;
        comp = (next - sum) - add;
        sum = next;
        if (term == 0.0) break;
    }
    return sum;
}

// Euler-accelerated alternating series at x = -1 (30-term transform table).
double dilog_minus_one_oracle() {
    constexpr int n = 30;
    double s[n];
    double partial = 0.0;
    for (int k = 1; k <= n; ++k) {
        partial += ((k % 2) ? -1.0 : 1.0) / (static_cast<double>(k) * k);
        s[k - 1] = partial;
    }
    for (int level = 1; level < n; ++level)
        for (int i = 0; i + level < n; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    return s[0];
}

} // namespace

TEST_CASE("dilog pinned values") {
    CHECK(dilog(0.0) == 0.0);
    CHECK(dilog(1.0) == doctest::Approx(kPi2 / 6.0).epsilon(1e-15));
    double oracle = dilog_minus_one_oracle();
    CHECK(dilog(-1.0) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(dilog(-1.0) == doctest::Approx(-kPi2 / 12.0).epsilon(1e-15));
    CHECK(dilog(0.5) == doctest::Approx(kPi2 / 12.0 - 0.5 * std::log(2.0) * std::log(2.0))
                            .epsilon(1e-15));
    CHECK_THROWS_AS(dilog(1.0000001), std::domain_error);
}

TEST_CASE("dilog agrees with the long partial series") {
    // For x < 0 the alternating tail of the 1e6-term sum is ~5e-13; the
    // half-next-term correction knocks it below the 1e-13 bound. For
    // 0 < x <= 0.9998 the geometric tail is already negligible.
    const long N = 1000000;
    double worst = 0.0;
    for (double x = -1.0; x <= 0.99991; x += 0.0909) {
        double ref = series_oracle(x, N);
        if (x < 0.0)
            ref += 0.5 * std::pow(x, static_cast<double>(N + 1)) /
                   (static_cast<double>(N + 1) * (N + 1));
        worst = std::max(worst, std::abs(dilog(x) - ref));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("dilog is strictly increasing on [-1,1]") {
    double prev = dilog(-1.0);
    for (int k = 1; k <= 200; ++k) {
        double v = dilog(-1.0 + 2.0 * k / 200.0);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("dilog_re pinned values and continuity") {
    CHECK(dilog_re(2.0) == doctest::Approx(kPi2 / 4.0).epsilon(1e-15));
    CHECK(dilog_re(1.0 + 1e-12) == doctest::Approx(kPi2 / 6.0).epsilon(1e-10));
    CHECK_THROWS_AS(dilog_re(1.0), std::domain_error);
    CHECK_THROWS_AS(dilog_re(0.5), std::domain_error);
}

TEST_CASE("two-term relation") {
    // Principal-branch form: Re Li2(1+e^P) + Re Li2(1+e^{-P}) = (pi^2 - P^2)/2.
    for (double P : {0.1, 1.0, 10.0})
        CHECK(std::abs(two_term_residual(P)) <= 1e-10);
    // Branch-free companion: Li2(1-e^P) + Li2(1-e^{-P}) = -P^2/2.
    for (double P : {0.3, 1.0, 4.0}) {
        double lhs = dilog(1.0 - std::exp(P)) + dilog(1.0 - std::exp(-P));
        CHECK(lhs == doctest::Approx(-0.5 * P * P).epsilon(1e-12));
    }
}

TEST_CASE("Rogers L") {
    CHECK(rogers_L(1e-12) == doctest::Approx(0.0).epsilon(1e-10));
    double x = 0.3;
    CHECK(rogers_L(x) + rogers_L(1.0 - x) ==
          doctest::Approx((kPi / 6.0) * (kPi2 / 6.0)).epsilon(1e-14));
    // L(1/2): the (1/2) log(x) log(1-x) term cancels the -log^2(2)/2 in Li2(1/2).
    CHECK(rogers_L(0.5) == doctest::Approx((kPi / 6.0) * (kPi2 / 12.0)).epsilon(1e-14));
    CHECK_THROWS_AS(rogers_L(0.0), std::domain_error);
    CHECK_THROWS_AS(rogers_L(1.0), std::domain_error);
}

TEST_CASE("five-term relation") {
    CHECK(std::abs(five_term_residual(0.5, 0.5)) <= 1e-12);
    CHECK(std::abs(five_term_residual(0.7, 1e-9)) <= 1e-8);  // degenerate limit
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> uni(0.005, 0.995);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k)
        worst = std::max(worst, std::abs(five_term_residual(uni(gen), uni(gen))));
    CHECK(worst <= 1e-12);
}
