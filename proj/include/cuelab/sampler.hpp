#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cuelab/rational.hpp"
#include "cuelab/rng.hpp"

namespace cuelab {

/// Metropolis chain targeting the Weyl eigenangle density ~ prod_{i<j} sin^2(pi (t_i - t_j))
/// on [0,1)^N. Single-site wrapped-Gaussian proposals; width adapted toward ~40% acceptance
/// during burn-in, then frozen.
class CueChain {
public:
    CueChain(long N, std::uint64_t seed) : N_(N), rng_(seed), width_(0.5 / std::sqrt(static_cast<double>(N) + 1.0)) {
        if (N < 1) throw std::invalid_argument("CueChain: N >= 1 required");
        angles_.resize(static_cast<size_t>(N));
        for (long i = 0; i < N; ++i) angles_[static_cast<size_t>(i)] = (static_cast<double>(i) + 0.5) / static_cast<double>(N);
    }

    void burn_in(long sweeps) {
        for (long s = 0; s < sweeps; ++s) {
            long acc = sweep();
            double rate = static_cast<double>(acc) / static_cast<double>(N_);
            width_ *= std::exp(0.3 * (rate - 0.4));
            width_ = std::min(0.5, std::max(1e-4, width_));
        }
        proposals_ = accepts_ = 0; // freeze width, reset statistics
    }

    /// One full sweep of single-site updates; returns the number of accepted moves.
    long sweep() {
        long acc = 0;
        for (long i = 0; i < N_; ++i) {
            double cur = angles_[static_cast<size_t>(i)];
            double prop = cur + width_ * rng_.gaussian();
            prop -= std::floor(prop);
            double dlog = 0.0;
            bool reject = false;
            for (long j = 0; j < N_; ++j) {
                if (j == i) continue;
                double sp = std::sin(M_PI * (prop - angles_[static_cast<size_t>(j)]));
                double sc = std::sin(M_PI * (cur - angles_[static_cast<size_t>(j)]));
                if (sp == 0.0) { reject = true; break; }
                dlog += 2.0 * (std::log(std::abs(sp)) - std::log(std::abs(sc)));
            }
            ++proposals_;
            if (!reject && std::log(rng_.uniform()) < dlog) {
                angles_[static_cast<size_t>(i)] = prop;
                ++acc;
                ++accepts_;
            }
        }
        return acc;
    }

    const std::vector<double>& angles() const { return angles_; }
    long size() const { return N_; }
    double acceptance_rate() const {
        return proposals_ ? static_cast<double>(accepts_) / static_cast<double>(proposals_) : 0.0;
    }
    double proposal_width() const { return width_; }

private:
    long N_;
    CounterRng rng_;
    double width_;
    std::vector<double> angles_;
    long proposals_ = 0, accepts_ = 0;
};

struct McStat {
    double mean;
    double stderr_;
    long samples;
    std::uint64_t seed;
    double acceptance;
};

/// Batch-means estimate of E f(angles) along the chain: one sample per sweep.
template <class F>
McStat chain_estimate(long N, long samples, long burnin_sweeps, std::uint64_t seed, F&& f) {
    if (samples < 1) throw std::invalid_argument("chain_estimate: samples >= 1 required");
    CueChain chain(N, seed);
    chain.burn_in(burnin_sweeps);
    const long nbatch = std::min<long>(50, samples);
    std::vector<double> bsum(static_cast<size_t>(nbatch), 0.0);
    std::vector<long> bn(static_cast<size_t>(nbatch), 0);
    for (long s = 0; s < samples; ++s) {
        chain.sweep();
        double v = f(chain.angles());
        long b = (s * nbatch) / samples; // consecutive batches preserve autocorrelation structure
        bsum[static_cast<size_t>(b)] += v;
        bn[static_cast<size_t>(b)]++;
    }
    double mean = 0.0;
    for (long b = 0; b < nbatch; ++b) {
        bsum[static_cast<size_t>(b)] /= static_cast<double>(bn[static_cast<size_t>(b)]);
        mean += bsum[static_cast<size_t>(b)];
    }
    mean /= static_cast<double>(nbatch);
    double var = 0.0;
    for (long b = 0; b < nbatch; ++b) var += (bsum[static_cast<size_t>(b)] - mean) * (bsum[static_cast<size_t>(b)] - mean);
    var /= static_cast<double>(nbatch > 1 ? nbatch - 1 : 1);
    return {mean, std::sqrt(var / static_cast<double>(nbatch)), samples, seed, chain.acceptance_rate()};
}

/// |tr U|^2 from eigenangles.
inline double functional_trace_sq(const std::vector<double>& t) {
    Cplx s = 0.0;
    for (double a : t) s += std::exp(Cplx(0.0, 2.0 * M_PI * a));
    return std::norm(s);
}

/// |Z(1)|^{2k} = prod_j |1 - e^{2 pi i t_j}|^{2k}.
inline double functional_z1_pow(const std::vector<double>& t, long k) {
    double logp = 0.0;
    for (double a : t) logp += std::log(std::norm(Cplx(1.0, 0.0) - std::exp(Cplx(0.0, 2.0 * M_PI * a))));
    return std::exp(static_cast<double>(k) * logp);
}

/// Secular coefficient sc_m = e_m of the eigenvalues, by the stable Newton e-recursion
/// (here: direct incremental elementary-symmetric update, O(N m)).
inline Cplx secular_coefficient(const std::vector<double>& t, long m) {
    std::vector<Cplx> e(static_cast<size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    for (double a : t) {
        Cplx z = std::exp(Cplx(0.0, 2.0 * M_PI * a));
        for (long j = m; j >= 1; --j) e[static_cast<size_t>(j)] += z * e[static_cast<size_t>(j - 1)];
    }
    return e[static_cast<size_t>(m)];
}

inline double functional_sc_pow(const std::vector<double>& t, long m, long k) {
    return std::pow(std::norm(secular_coefficient(t, m)), static_cast<double>(k));
}

} // namespace cuelab
