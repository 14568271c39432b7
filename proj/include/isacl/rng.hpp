#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace isacl {

/// Per-run source of randomness. Every run owns exactly one Rng and each
/// optimizer consumes draws in a fixed, documented order, so equal seeds
/// replay bit-identically. The helpers below avoid std::*_distribution on
/// purpose: the mapping from raw words to variates is pinned here and does
/// not depend on the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// One raw 64-bit word (used to derive child seeds).
    std::uint64_t raw() { return gen_(); }

    /// Uniform on [0, 1) with 53-bit resolution. One word.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi). One word.
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Standard normal via Box-Muller. Two words per pair; the sine branch
    /// is cached and returned by the following call.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = kTwoPi * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform index in [0, n). One word (fixed-point reduction, no modulo bias
    /// beyond 2^-64).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(gen_()) * static_cast<unsigned __int128>(n)) >> 64);
    }

private:
    static constexpr double kTwoPi = 6.283185307179586476925286766559;
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace isacl
