#ifndef HLKAPPA_RNG_HPP_
#define HLKAPPA_RNG_HPP_

#include <cstdint>
#include <random>

#include "hlkappa/rational.hpp"

namespace hlkappa {

// splitmix64: used to derive independent per-instance seeds from one
// user seed, so sweep entry i is reproducible in isolation.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic across platforms: mt19937_64 has a pinned algorithm, and we
// avoid std::uniform_real_distribution (its mapping is unspecified).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [lo, hi] inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // uniform rational lo + k (hi - lo) / 2^20: exact, dense enough for sweeps
    Rational uniform_rational(const Rational& lo, const Rational& hi) {
        const std::int64_t denom = 1 << 20;
        std::int64_t k = uniform_int(0, denom);
        return lo + (hi - lo) * Rational(k, denom);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hlkappa

#endif  // HLKAPPA_RNG_HPP_
