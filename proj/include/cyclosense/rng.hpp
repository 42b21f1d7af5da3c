#pragma once

/**
 * @file rng.hpp
 * @brief Deterministic random streams for reproducible simulation.
 *
 * All randomness flows through RandomStream so that a (seed, trial index)
 * pair fully determines every drawn sample, independent of platform and
 * thread count. Uniform and Gaussian generation are implemented explicitly
 * rather than through std:: distributions, whose output sequences are
 * implementation-defined.
 */

#include <cstdint>
#include <random>

#include "cyclosense/types.hpp"

namespace cyclosense {

// SplitMix64 mixing step. Advances `state` and returns a whitened word.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via the Marsaglia polar method (one spare cached).
    double standard_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    /// Zero-mean circularly symmetric complex Gaussian with E|w|^2 = variance,
    /// i.e. real and imaginary parts independent N(0, variance/2).
    cplx zmcscg(double variance) {
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-std::log(s) / s * variance);
        return {u * m, v * m};
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cyclosense
