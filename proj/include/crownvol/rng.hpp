#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Seeded, partition-stable sampling streams. Each 64k-sample block owns an
// mt19937_64 seeded from (seed, block index) via splitmix64, so estimates are
// bit-identical for any worker count.

namespace crownvol {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class BlockRng {
  public:
    BlockRng(std::uint64_t seed, std::uint64_t block)
        : gen_(splitmix64(seed ^ splitmix64(block))) {}

    // Uniform on (0, 1): 53-bit mantissa, zero excluded.
    double uniform() {
        std::uint64_t r = gen_();
        return ((r >> 11) + 0.5) * 0x1.0p-53;
    }

    double exponential() { return -std::log(uniform()); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace crownvol
