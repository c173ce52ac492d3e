#pragma once

#include <cmath>
#include <cstdint>

namespace cuelab {

/// Counter-based generator: SplitMix64 output function applied to (seed, stream, counter).
/// Bit-reproducible for a fixed seed; streams split deterministically for parallel use.
struct CounterRng {
    std::uint64_t seed;
    std::uint64_t stream;
    std::uint64_t counter = 0;

    explicit CounterRng(std::uint64_t seed_, std::uint64_t stream_ = 0) : seed(seed_), stream(stream_) {}

    CounterRng split(std::uint64_t substream) const {
        return CounterRng(seed, mix(stream * 0x9e3779b97f4a7c15ULL + substream + 1));
    }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = seed;
        z = mix(z ^ mix(stream));
        z = mix(z ^ mix(counter++));
        return z;
    }

    /// Uniform on (0, 1) (never exactly 0, safe for logs).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double gaussian() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential() { return -std::log(uniform()); }

    /// Gamma(shape) for positive integer shape: sum of exponentials.
    double gamma_int(long shape) {
        double s = 0.0;
        for (long i = 0; i < shape; ++i) s += exponential();
        return s;
    }

    /// Dirichlet(kappa, ..., kappa) over k coordinates (integer kappa).
    void dirichlet(long k, long kappa, double* out) {
        double tot = 0.0;
        for (long j = 0; j < k; ++j) {
            out[j] = gamma_int(kappa);
            tot += out[j];
        }
        for (long j = 0; j < k; ++j) out[j] /= tot;
    }
};

} // namespace cuelab
