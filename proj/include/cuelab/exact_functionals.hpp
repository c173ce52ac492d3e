#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cuelab/partitions.hpp"
#include "cuelab/polytope.hpp"
#include "cuelab/rational.hpp"
#include "cuelab/symfun.hpp"

namespace cuelab {

/// E|Z_{U_N}(1)|^{2k}: Jacobi-Trudi over the alphabet 1^{2k}, cross-checked against the
/// Weyl dimension of the k x N rectangle in 2k letters.
inline BigInt ks_moment(long N, long k) {
    if (N < 1 || k < 1) throw std::invalid_argument("ks_moment: N, k >= 1 required");
    HSeries<Rat> hs = hseries_ones(Rat(2 * k), N + k - 1);
    Rat jt = schur_rect_jacobi_trudi(N, k, hs);
    BigInt weyl = weyl_dimension(Partition::rect(N, k), 2 * k);
    if (jt != Rat(weyl)) throw std::logic_error("ks_moment: Jacobi-Trudi and Weyl routes disagree");
    return weyl;
}

/// E|sc_m(U_N)|^{2k} = K_{(N^k), (m^k, (N-m)^k)}.
inline BigInt secular_moment(long N, long m, long k) {
    if (m < 0 || m > N) throw std::out_of_range("secular_moment: need 0 <= m <= N");
    if (N < 1 || k < 1) throw std::invalid_argument("secular_moment: N, k >= 1 required");
    std::vector<long> content;
    for (long i = 0; i < k; ++i) content.push_back(m);
    for (long i = 0; i < k; ++i) content.push_back(N - m);
    return kostka(Partition::rect(N, k), content);
}

/// I_k(m, N) = [x^m] E|det(I - xU_N)|^{2k}-type coefficient functional,
/// evaluated as sum over mu in the k x N box of s_mu(1^k) s_{mu^c}(1^k).
inline BigInt kr3g_moment(long N, long m, long k) {
    if (N < 1 || k < 1) throw std::invalid_argument("kr3g_moment: N, k >= 1 required");
    if (m < 0 || m > k * N) throw std::out_of_range("kr3g_moment: need 0 <= m <= kN");
    BigInt total = 0;
    for (const Partition& mu : enumerate_box(k, N, m))
        total += weyl_dimension(mu, k) * weyl_dimension(box_complement(mu, k, N), k);
    return total;
}

/// MoM(N | k, beta): chain enumeration over partition chains of step size N*beta in the
/// (k*beta) x N box, each step weighted by the skew Schur evaluation in 2*beta letters.
inline BigInt mom_moment(long N, long k, long beta) {
    if (N < 1 || k < 1 || beta < 1) throw std::invalid_argument("mom_moment: N, k, beta >= 1 required");
    long rows = k * beta;
    std::map<Partition, BigInt> level{{Partition(), BigInt(1)}};
    for (long j = 1; j <= k; ++j) {
        std::map<Partition, BigInt> next;
        for (const Partition& la : enumerate_box(rows, N, j * N * beta)) {
            BigInt acc = 0;
            for (const auto& [prev, w] : level) {
                if (!la.contains(prev)) continue;
                acc += w * skew_schur_ones(la, prev, 2 * beta);
            }
            if (acc != 0) next[la] = acc;
        }
        level = std::move(next);
    }
    Partition full = Partition::rect(N, rows);
    auto it = level.find(full);
    return it == level.end() ? BigInt(0) : it->second;
}

/// E|Z_{U_N,t}(lambda)|^{2k} = [X^t Y^t] H[X + Y + lambda^2 XY], N >= tk.
/// Feasible range roughly k <= 3, t <= 8.
inline Rat truncated_moment_lambda(long k, long t, const Rat& lambda2) {
    if (k < 0 || t < 0 || lambda2 < 0) throw std::invalid_argument("truncated_moment_lambda: bad arguments");
    if (k == 0 || t == 0) return 1;
    size_t nv = static_cast<size_t>(2 * k); // x_1..x_k, y_1..y_k
    std::vector<long> caps(nv, t);
    BoundedMultiPoly<Rat> acc(caps);
    acc.c[acc.index(std::vector<long>(nv, 0))] = 1;
    auto geometric = [&](size_t vi, size_t vj, const Rat& r) {
        // truncated series of 1/(1 - r x_vi x_vj), or of 1/(1 - r x_vi) if vi == vj
        BoundedMultiPoly<Rat> g(caps);
        std::vector<long> e(nv, 0);
        Rat p = 1;
        for (long a = 0; a <= t; ++a) {
            e[vi] = a;
            if (vj != vi) e[vj] = a;
            g.coeff(e) = p;
            p *= r;
        }
        return g;
    };
    for (size_t i = 0; i < static_cast<size_t>(k); ++i) acc = acc.mul(geometric(i, i, Rat(1)));
    for (size_t j = 0; j < static_cast<size_t>(k); ++j) acc = acc.mul(geometric(static_cast<size_t>(k) + j, static_cast<size_t>(k) + j, Rat(1)));
    for (size_t i = 0; i < static_cast<size_t>(k); ++i)
        for (size_t j = 0; j < static_cast<size_t>(k); ++j)
            if (lambda2 != 0) acc = acc.mul(geometric(i, static_cast<size_t>(k) + j, lambda2));
    return acc.coeff(std::vector<long>(nv, t));
}

/// Ratios expectation R_N(X, Y) = s_{N^k}[e^{iX/N} - e^{iY/N}] (points e^{2 pi i x_j / N}).
inline Cplx ratio_moment(long N, long k, const std::vector<double>& X, const std::vector<double>& Y) {
    if (static_cast<long>(X.size()) - static_cast<long>(Y.size()) < 0)
        throw std::invalid_argument("ratio_moment: need |X| >= |Y|");
    std::vector<Cplx> px, py;
    for (double x : X) px.push_back(std::exp(Cplx(0.0, 2.0 * M_PI * x / static_cast<double>(N))));
    for (double y : Y) py.push_back(std::exp(Cplx(0.0, 2.0 * M_PI * y / static_cast<double>(N))));
    for (const Cplx& a : px)
        for (const Cplx& b : py)
            if (std::abs(a - b) < 1e-12) throw std::domain_error("ratio_moment: x-point collides with y-point");
    HSeries<Cplx> hs = hseries_supersym(px, py, N + k - 1);
    return schur_rect_jacobi_trudi(N, k, hs);
}

/// Joint autocorrelation det(K_{N+k}(x_i, conj y_j)) / (Delta(X) conj(Delta(Y))),
/// K_M(z, w) = sum_{r=1}^M (z w)^r; points on the unit circle.
inline Cplx autocorr_det(long N, const std::vector<Cplx>& X, const std::vector<Cplx>& Y) {
    if (X.size() != Y.size()) throw std::invalid_argument("autocorr_det: need |X| = |Y|");
    long k = static_cast<long>(X.size());
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j) {
            if (std::abs(X[i] - X[j]) < 1e-12) throw std::domain_error("autocorr_det: repeated x-point");
            if (std::abs(Y[i] - Y[j]) < 1e-12) throw std::domain_error("autocorr_det: repeated y-point");
        }
    std::vector<std::vector<Cplx>> a(static_cast<size_t>(k), std::vector<Cplx>(static_cast<size_t>(k)));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            Cplx q = X[static_cast<size_t>(i)] * std::conj(Y[static_cast<size_t>(j)]);
            Cplx s = 0.0, p = 1.0;
            for (long r = 1; r <= N + k; ++r) {
                p *= q;
                s += p;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    Cplx det = detail::det_partial_pivot(std::move(a));
    Cplx dx = 1.0, dy = 1.0;
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j) {
            dx *= (X[static_cast<size_t>(j)] - X[static_cast<size_t>(i)]);
            dy *= std::conj(Y[static_cast<size_t>(j)] - Y[static_cast<size_t>(i)]);
        }
    return det / (dx * dy);
}

/// Normalized joint derivative moment (1/r!) sum_{la |- r} d_la^2 prod (k+c)(-N+c)/(2k+c).
/// The derivative convention (d/dx vs d/dtheta) underlying this value is deliberately
/// not resolved here; see the diagnostic probe in the selftest suite.
inline Rat dehaye_derivative_ratio(long N, long k, long r) {
    if (r < 0) throw std::invalid_argument("dehaye_derivative_ratio: r >= 0 required");
    Rat total = 0;
    for (const Partition& la : partitions_of(r)) {
        CellData cd = cell_data(la);
        Rat term = Rat(syt_count(la) * syt_count(la));
        for (long c : cd.contents) {
            if (2 * k + c == 0) throw std::domain_error("dehaye_derivative_ratio: pole at 2k + content = 0");
            term *= Rat(k + c) * Rat(-N + c) / Rat(2 * k + c);
        }
        total += term;
    }
    return total / Rat(factorial(r));
}

} // namespace cuelab
