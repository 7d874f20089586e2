#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qhv {

/// Counter-based SplitMix64. The n-th output of stream `stream` under `seed`
/// is mix64(base + (n + 1) * kGamma), with base = mix64(seed ^ mix64(stream + kGamma)).
/// Any (seed, stream) pair gives an independent, platform-independent sequence,
/// so a point's coordinates depend only on the seed and its index.
class CounterRng {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix64(seed ^ mix64(stream + kGamma))) {}

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Exponential(1) by inverse CDF.
    double exponential() { return -std::log(uniform_open0()); }

    /// Standard normal by Box-Muller (one variate per call, the second is discarded).
    double normal() {
        const double u1 = uniform_open0();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace qhv
