#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "crownvol/geometry.hpp"
#include "crownvol/quadrature.hpp"
#include "crownvol/rng.hpp"

// Volume integrals over the gap simplex {delta_i > 0, sum delta_i = P}:
// crown volumes, disc volumes, the small-P constants q_n, closed forms for
// n <= 4 and the factorized extension of Mirzakhani volumes.

namespace crownvol {

enum class Proposal { uniform, dirichlet_half };

struct MCEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
    Proposal proposal = Proposal::dirichlet_half;
};

/// (e^P - 1) / prod_{i=1}^{n} (e^{delta_i + delta_{i+1}} - 1), cyclic.
/// The 1/2^{n-1} prefactor belongs to the volume, not the integrand.
double crown_integrand(const DeltaGaps& g);

/// Draws one point of the simplex {delta > 0, sum = P} and returns the
/// importance weight w such that E[w g(delta)] = integral of g over the
/// simplex (Lebesgue measure in delta_1..delta_{n-1}).
double simplex_sample(int n, double P, Proposal proposal, BlockRng& rng,
                      std::vector<double>& delta_out);

/// Generic simplex Monte Carlo: prefactor * integral of f over the simplex.
/// Deterministic in (seed, N, proposal) for any thread count.
template <class F>
MCEstimate mc_simplex_integral(int n, double P, long long N, std::uint64_t seed,
                               Proposal proposal, int threads, double prefactor,
                               F&& f);

MCEstimate crown_volume_mc(int n, double P, long long N, std::uint64_t seed,
                           Proposal proposal = Proposal::dirichlet_half,
                           int threads = 1);

/// Nested adaptive quadrature of the crown integrand, n in {3, 4}.
QuadratureResult crown_volume_quadrature(int n, double P);

double v1_closed();
double v2_closed(double P);            // P / (2 (e^P - 1))
double v3_closed(double P);            // (P^2 + pi^2) / (8 (e^P + 1))

/// 1D reduction of the n = 4 volume: a dilogarithm bracket against
/// e^D/((e^D-1)(e^P-e^D)), integrated with the u = log(e^D - 1) endpoint
/// substitution (integrand is symmetric about P/2).
QuadratureResult v4_reduced_quadrature(double P);

/// Large-P regime: P^{n-1} e^{-P} / (2^{n-1} (n-1)!).
double crown_asymptote_large_P(int n, double P);

/// q_n = integral over the unit simplex of prod_{i=1}^{n-1} (a_i+a_{i+1})^{-1};
/// small-P crown limit is (n/2^n) q_n.
MCEstimate q_n_mc(int n, long long N, std::uint64_t seed, int threads = 1);
double q3_closed();                    // pi^2/6
double q4_closed();                    // pi^2/3  (= 2 * int_0^1 log((1-x)/x) log(1/x) dx)

/// Disc volumes: integral of prod_{i=2}^{n-2} (delta_i + delta_{i+1})^{-1}
/// over the unit simplex in delta_2..delta_{n-1}.
MCEstimate disc_volume_mc(int n, long long N, std::uint64_t seed, int threads = 1);
QuadratureResult disc_volume_quadrature(int n);  // n in {4, 5, 6}

struct CrownedHole {
    double perimeter = 0.0;
    int cusps = 0;
};

/// V_mir * prod_i f_{n_i}(P_i) with f_0 = 1 and f_n(P) = P * V^crown_{n,P}
/// (closed form for n <= 3, reduced quadrature for n = 4, MC beyond).
double mirzakhani_factorized(double v_mir, std::span<const CrownedHole> holes,
                             long long mc_samples = 1000000,
                             std::uint64_t seed = 1);

/// Default sample counts: 1e6 up to n = 4, 1e7 up to n = 8, 1e8 beyond.
long long default_mc_samples(int n);

// --- implementation of the templated engine ---

namespace detail {

struct BlockSums {
    double sum = 0.0;
    double sumsq = 0.0;
};

constexpr long long kBlockSize = 1 << 16;

void run_blocks(long long n_blocks, int threads,
                const std::function<void(long long)>& work);

} // namespace detail

template <class F>
MCEstimate mc_simplex_integral(int n, double P, long long N, std::uint64_t seed,
                               Proposal proposal, int threads, double prefactor,
                               F&& f) {
    if (N <= 1) throw std::invalid_argument("mc_simplex_integral: need N > 1");
    const long long n_blocks = (N + detail::kBlockSize - 1) / detail::kBlockSize;
    std::vector<detail::BlockSums> partial(static_cast<std::size_t>(n_blocks));

    detail::run_blocks(n_blocks, threads, [&](long long b) {
        BlockRng rng(seed, static_cast<std::uint64_t>(b));
        const long long lo = b * detail::kBlockSize;
        const long long hi = std::min(N, lo + detail::kBlockSize);
        std::vector<double> delta(static_cast<std::size_t>(n));
        double s = 0.0, s2 = 0.0;
        for (long long k = lo; k < hi; ++k) {
            double w = simplex_sample(n, P, proposal, rng, delta);
            double v = w * f(delta);
            s += v;
            s2 += v * v;
        }
        partial[static_cast<std::size_t>(b)] = {s, s2};
    });

    double sum = 0.0, sumsq = 0.0;
    for (const auto& p : partial) {  // fixed reduction order
        sum += p.sum;
        sumsq += p.sumsq;
    }
    const double nn = static_cast<double>(N);
    double mean = sum / nn;
    double var = (sumsq - sum * sum / nn) / (nn * (nn - 1.0));
    MCEstimate e;
    e.estimate = prefactor * mean;
    e.std_error = prefactor * std::sqrt(std::max(var, 0.0));
    e.n_samples = N;
    e.seed = seed;
    e.proposal = proposal;
    return e;
}

} // namespace crownvol
