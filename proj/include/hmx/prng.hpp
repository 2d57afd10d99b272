#pragma once
//
// Counter-based pseudo-random generator. Every draw is a pure function of
// (seed, stream, counter), so streams can be replayed from any language
// that has 64-bit integer arithmetic. The exact scheme is documented in
// the README under "Random numbers".
//

#include <cstdint>
#include <cmath>

namespace hmx {

class Prng {
public:
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ull;

    explicit Prng(std::uint64_t seed, std::uint64_t stream = 0)
        : base_(mix64(seed + gamma * stream)), counter_(0) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next_u64() { return mix64(base_ + gamma * (++counter_)); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// Standard normal via Box-Muller; consumes exactly two draws.
    double normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_;
};

} // namespace hmx
