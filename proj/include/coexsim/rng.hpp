// SPDX-License-Identifier: Apache-2.0
//
// coexsim - link-level simulator for beamforming-based unlicensed-band coexistence

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace coexsim {

/// splitmix64 finalizer; used to derive independent substreams from
/// (seed, slot, salt) without consuming generator state.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t slot,
                                    std::uint64_t salt) {
    return mix64(seed ^ mix64(slot ^ mix64(salt)));
}

/// Seeded random source. mt19937_64 raw output is pinned by the C++
/// standard; the mappings below are spelled out by hand so that streams
/// are identical across standard libraries (std::*_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// uniform double in (0, 1]
    double uniform() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    /// uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        // 64-bit multiply-shift; bias is < 2^-64 per draw, irrelevant here
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform() <= p; }

    /// standard normal via Box-Muller (one uniform pair per value)
    double gaussian() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// circularly symmetric complex Gaussian, unit variance:
    /// real and imaginary parts i.i.d. N(0, 1/2), |z|^2 ~ Exp(1)
    std::complex<double> cgaussian_unit() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace coexsim
