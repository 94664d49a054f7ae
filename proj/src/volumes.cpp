#include "crownvol/volumes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "crownvol/specfun.hpp"

namespace crownvol {

namespace detail {

void run_blocks(long long n_blocks, int threads,
                const std::function<void(long long)>& work) {
    threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, n_blocks)));
    if (threads == 1) {
        for (long long b = 0; b < n_blocks; ++b) work(b);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                long long b = next.fetch_add(1);
                if (b >= n_blocks) return;
                work(b);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

double crown_integrand(const DeltaGaps& g) {
    const int n = g.cusp_count();
    double acc = log_expm1(g.perimeter());
    for (int i = 0; i < n; ++i)
        acc -= log_expm1(g.delta[i] + g.delta[(i + 1) % n]);
    return std::exp(acc);
}

double simplex_sample(int n, double P, Proposal proposal, BlockRng& rng,
                      std::vector<double>& delta) {
    delta.resize(static_cast<std::size_t>(n));
    if (n == 1) {
        delta[0] = P;
        return 1.0;  // zero-dimensional simplex
    }
    if (proposal == Proposal::uniform) {
        double tot = 0.0;
        for (int i = 0; i < n; ++i) {
            delta[i] = rng.exponential();
            tot += delta[i];
        }
        for (int i = 0; i < n; ++i) delta[i] *= P / tot;
        double w = 1.0;  // simplex volume P^{n-1}/(n-1)!
        for (int i = 1; i < n; ++i) w *= P / i;
        return w;
    }
    // dirichlet_half: normalized squared standard normals;
    // w = P^{n-1} pi^{n/2} prod sqrt(a_i) / Gamma(n/2)
    double tot = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = rng.normal();
        delta[i] = z * z;
        tot += delta[i];
    }
    double logw = -std::lgamma(0.5 * n) + 0.5 * n * std::log(std::numbers::pi) +
                  (n - 1) * std::log(P);
    for (int i = 0; i < n; ++i) {
        double a = delta[i] / tot;
        delta[i] = P * a;
        logw += 0.5 * std::log(a);
    }
    return std::exp(logw);
}

MCEstimate crown_volume_mc(int n, double P, long long N, std::uint64_t seed,
                           Proposal proposal, int threads) {
    if (n < 3) throw std::invalid_argument("crown_volume_mc: n >= 3 (use closed forms below)");
    if (N < 10000) throw std::invalid_argument("crown_volume_mc: need at least 1e4 samples");
    double pref = std::ldexp(1.0, -(n - 1));  // 1/2^{n-1}
    const double log_ep1 = log_expm1(P);
    return mc_simplex_integral(n, P, N, seed, proposal, threads, pref,
                               [n, log_ep1](const std::vector<double>& d) {
                                   double acc = log_ep1;
                                   for (int i = 0; i < n; ++i)
                                       acc -= log_expm1(d[i] + d[(i + 1) % n]);
                                   return std::exp(acc);
                               });
}

QuadratureResult crown_volume_quadrature(int n, double P) {
    if (n != 3 && n != 4)
        throw std::invalid_argument("crown_volume_quadrature: n in {3,4}");
    const double eP1 = std::expm1(P);
    QuadratureResult out;

    if (n == 3) {
        auto outer = [&](double d2) {
            auto inner = [&](double d1) {
                return 1.0 / (std::expm1(P - d1) * std::expm1(P - d2 + d1));
            };
            auto r = integrate_tanh_sinh(inner, 0.0, d2, 1e-12, 9);
            out.evaluations += r.evaluations;
            return r.value / std::expm1(d2);
        };
        auto r = integrate_adaptive(outer, 0.0, P, 1e-11, 1e-9, 40);
        out.value = 0.25 * eP1 * r.value;
        out.abs_error_bound = 0.25 * eP1 * r.abs_error_bound;
        out.evaluations += r.evaluations;
        return out;
    }

    // n = 4: outer over Delta_2, then Delta_1 in (0, Delta_2) and
    // Delta_3 in (Delta_2, P). The Delta_2 marginal is symmetric about P/2
    // (gap reversal), so integrate twice the lower half in the substituted
    // variable u = log(e^{Delta_2} - 1), which removes the edge singularity.
    auto mid2 = [&](double d2) {
        auto mid = [&](double d1) {
            auto inner = [&](double d3) {
                return 1.0 / (std::expm1(d3 - d1) * std::expm1(P + d1 - d3));
            };
            auto r = integrate_tanh_sinh(inner, d2, P, 1e-11, 9);
            out.evaluations += r.evaluations;
            return r.value;
        };
        auto r = integrate_tanh_sinh(mid, 0.0, d2, 1e-10, 9);
        out.evaluations += r.evaluations;
        return r.value;
    };
    auto outer_u = [&](double u) {
        double d2 = std::log1p(std::exp(u));
        if (!(d2 > 0.0)) return 0.0;
        return mid2(d2) * std::exp(-d2) / std::expm1(P - d2);
    };
    const double u_hi = log_expm1(0.5 * P);
    const double u_lo = std::min(-45.0, u_hi - 45.0);
    auto r = integrate_adaptive(outer_u, u_lo, u_hi, 1e-10, 2e-8, 30);
    out.value = 0.25 * eP1 * r.value;
    out.abs_error_bound = 0.25 * eP1 * r.abs_error_bound + 1e-12;
    out.evaluations += r.evaluations;
    return out;
}

double v1_closed() { return 1.0; }

double v2_closed(double P) { return 0.5 * P / std::expm1(P); }

double v3_closed(double P) {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return (P * P + pi2) / (8.0 * (std::exp(P) + 1.0));
}

QuadratureResult v4_reduced_quadrature(double P) {
    if (!(P > 0.0)) throw std::invalid_argument("v4_reduced_quadrature: P > 0");
    const double eP = std::exp(P);

    auto bracket = [&](double d2) {
        return -dilog(std::exp(d2 - P)) + dilog(std::exp(-P)) - dilog(std::exp(-d2)) -
               dilog_re(eP) + dilog_any(std::exp(P - d2)) + dilog_any(std::exp(d2));
    };
    // Integrand in u = log(e^{Delta_2} - 1): d(Delta_2) e^{Delta_2}/(e^{Delta_2}-1) = du,
    // leaving bracket/(e^P - e^{Delta_2}); symmetric about Delta_2 = P/2, so twice
    // the lower half. Lower u cutoff where the integrand is below 1e-18.
    auto f = [&](double u) {
        double d2 = std::log1p(std::exp(u));
        if (!(d2 > 0.0)) return 0.0;
        return bracket(d2) / (eP - std::exp(d2));
    };
    const double u_hi = log_expm1(0.5 * P);
    const double u_lo = std::min(-45.0, u_hi - 45.0);
    auto r = integrate_adaptive(f, u_lo, u_hi, 1e-12, 1e-11);
    return {0.25 * r.value, 0.25 * r.abs_error_bound + 1e-15, r.evaluations};
}

double crown_asymptote_large_P(int n, double P) {
    double v = std::exp(-P) * std::ldexp(1.0, -(n - 1));
    for (int i = 1; i < n; ++i) v *= P / i;
    return v;
}

MCEstimate q_n_mc(int n, long long N, std::uint64_t seed, int threads) {
    if (n < 3) throw std::invalid_argument("q_n_mc: n >= 3");
    return mc_simplex_integral(n, 1.0, N, seed, Proposal::dirichlet_half, threads,
                               1.0, [n](const std::vector<double>& a) {
                                   double acc = 1.0;
                                   for (int i = 0; i + 1 < n; ++i)
                                       acc /= (a[i] + a[i + 1]);
                                   return acc;
                               });
}

double q3_closed() { return std::numbers::pi * std::numbers::pi / 6.0; }

// q4 = 2 int_0^1 log((1-x)/x) log(1/x) dx = pi^2/3 (the a2<->a3 symmetry of
// the defining integral contributes the factor 2).
double q4_closed() { return std::numbers::pi * std::numbers::pi / 3.0; }

MCEstimate disc_volume_mc(int n, long long N, std::uint64_t seed, int threads) {
    if (n < 4) throw std::invalid_argument("disc_volume_mc: n >= 4");
    const int m = n - 2;  // delta_2..delta_{n-1}
    return mc_simplex_integral(m, 1.0, N, seed, Proposal::dirichlet_half, threads,
                               1.0, [m](const std::vector<double>& d) {
                                   double acc = 1.0;
                                   for (int i = 0; i + 1 < m; ++i)
                                       acc /= (d[i] + d[i + 1]);
                                   return acc;
                               });
}

QuadratureResult disc_volume_quadrature(int n) {
    if (n == 4) return {1.0, 0.0, 0};  // integrand identically 1 on (0,1)
    if (n == 5) {
        // int_0^1 dz3 int_0^{z3} dz2 / (z3 (1 - z2))
        QuadratureResult out;
        auto outer = [&](double z3) {
            auto inner = [&](double z2) { return 1.0 / (1.0 - z2); };
            auto r = integrate_tanh_sinh(inner, 0.0, z3, 1e-12);
            out.evaluations += r.evaluations;
            return r.value / z3;
        };
        auto r = integrate_adaptive(outer, 0.0, 1.0, 1e-10, 1e-9);
        out.value = r.value;
        out.abs_error_bound = r.abs_error_bound;
        out.evaluations += r.evaluations;
        return out;
    }
    if (n == 6) {
        // int dz4 dz3 dz2 / (z3 (z4 - z2)(1 - z3)), 0 < z2 < z3 < z4 < 1
        QuadratureResult out;
        auto outer = [&](double z3) {
            auto mid = [&](double z2) {
                auto inner = [&](double z4) { return 1.0 / (z4 - z2); };
                auto r = integrate_tanh_sinh(inner, z3, 1.0, 1e-10, 10);
                out.evaluations += r.evaluations;
                return r.value;
            };
            auto r = integrate_tanh_sinh(mid, 0.0, z3, 1e-9, 10);
            out.evaluations += r.evaluations;
            return r.value / (z3 * (1.0 - z3));
        };
        auto r = integrate_adaptive(outer, 0.0, 1.0, 1e-8, 1e-7, 24);
        out.value = r.value;
        out.abs_error_bound = r.abs_error_bound;
        out.evaluations += r.evaluations;
        return out;
    }
    throw std::invalid_argument("disc_volume_quadrature: n in {4,5,6}");
}

double mirzakhani_factorized(double v_mir, std::span<const CrownedHole> holes,
                             long long mc_samples, std::uint64_t seed) {
    if (v_mir < 0.0)
        throw std::invalid_argument("mirzakhani_factorized: negative base volume");
    double v = v_mir;
    for (const auto& h : holes) {
        if (h.cusps < 0 || (h.cusps > 0 && !(h.perimeter > 0.0)))
            throw std::invalid_argument("mirzakhani_factorized: bad hole data");
        if (h.cusps == 0) continue;
        double crown;
        switch (h.cusps) {
            case 1: crown = v1_closed(); break;
            case 2: crown = v2_closed(h.perimeter); break;
            case 3: crown = v3_closed(h.perimeter); break;
            case 4: crown = v4_reduced_quadrature(h.perimeter).value; break;
            default:
                crown = crown_volume_mc(h.cusps, h.perimeter,
                                        std::max<long long>(mc_samples, 10000), seed)
                            .estimate;
                break;
        }
        v *= h.perimeter * crown;
    }
    return v;
}

long long default_mc_samples(int n) {
    if (n <= 4) return 1000000;
    if (n <= 8) return 10000000;
    return 100000000;
}

} // namespace crownvol
