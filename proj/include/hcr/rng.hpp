// SPDX-License-Identifier: MIT
//
// Deterministic random number generation. Hand-rolled generators and
// distributions so that a fixed seed produces bit-identical streams on every
// platform and compiler (std:: distributions are implementation-defined).
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "hcr/config.hpp"

namespace hcr {

/// splitmix64; used for seeding and for hashing (seed, draw index) pairs.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent stream seed for a sub-draw.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x2545f4914f6cdd1dULL * (index + 1));
    return splitmix64(s);
}

/// xoshiro256** with splitmix-expanded seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0,1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via Box-Muller (explicit, platform-stable).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0x1.0p-60) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        have_spare_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hcr
