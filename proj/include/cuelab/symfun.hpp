#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "cuelab/partitions.hpp"
#include "cuelab/rational.hpp"

namespace cuelab {

/// Truncated h-series (h_0..h_D) of an alphabet over scalar ring R.
template <class R>
struct HSeries {
    std::vector<R> h; // h[m], m = 0..D

    long degree_cap() const { return static_cast<long>(h.size()) - 1; }
    /// h_m with the Jacobi-Trudi convention h_{m<0} = 0.
    R at(long m) const {
        if (m < 0) return R(0);
        if (m > degree_cap()) throw std::out_of_range("HSeries: degree cap exceeded");
        return h[static_cast<size_t>(m)];
    }
};

/// h-series of a finite point alphabet: series of prod 1/(1 - t x_i).
template <class R>
HSeries<R> hseries_from_points(const std::vector<R>& points, long D) {
    HSeries<R> s;
    s.h.assign(static_cast<size_t>(D) + 1, R(0));
    s.h[0] = R(1);
    for (const R& x : points)
        for (long m = 1; m <= D; ++m) s.h[static_cast<size_t>(m)] += x * s.h[static_cast<size_t>(m - 1)];
    return s;
}

/// h-series of the alphabet 1^kappa (kappa a positive rational): h_m = kappa^(m rising)/m!.
inline HSeries<Rat> hseries_ones(const Rat& kappa, long D) {
    if (kappa <= 0) throw std::invalid_argument("hseries_ones: kappa must be positive");
    HSeries<Rat> s;
    s.h.assign(static_cast<size_t>(D) + 1, Rat(0));
    s.h[0] = 1;
    for (long m = 1; m <= D; ++m)
        s.h[static_cast<size_t>(m)] = s.h[static_cast<size_t>(m - 1)] * (kappa + m - 1) / m;
    return s;
}

/// h_r[1^m] = C(r+m-1, m-1) as a big integer.
inline BigInt h_ones_int(long r, long m) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    return binomial(BigInt(r) + m - 1, m - 1);
}

/// Supersymmetric h-series: coefficients of prod(1 - t y_j) / prod(1 - t x_i).
template <class R>
HSeries<R> hseries_supersym(const std::vector<R>& X, const std::vector<R>& Y, long D) {
    HSeries<R> s = hseries_from_points(X, D);
    for (const R& y : Y) // multiply by (1 - t y)
        for (long m = D; m >= 1; --m) s.h[static_cast<size_t>(m)] -= y * s.h[static_cast<size_t>(m - 1)];
    return s;
}

namespace detail {

// Fraction-free (Bareiss) determinant; exact over any field, division-exact over integers.
inline Rat det_bareiss(std::vector<std::vector<Rat>> a) {
    const long n = static_cast<long>(a.size());
    if (n == 0) return 1;
    Rat prev = 1;
    int sign = 1;
    for (long p = 0; p < n - 1; ++p) {
        if (a[p][p] == 0) {
            long r = p + 1;
            while (r < n && a[r][p] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (long i = p + 1; i < n; ++i)
            for (long j = p + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

// Partial-pivot Gaussian elimination determinant for the complex ring.
inline Cplx det_partial_pivot(std::vector<std::vector<Cplx>> a) {
    const long n = static_cast<long>(a.size());
    Cplx det = 1.0;
    for (long p = 0; p < n; ++p) {
        long piv = p;
        for (long r = p + 1; r < n; ++r)
            if (std::abs(a[r][p]) > std::abs(a[piv][p])) piv = r;
        if (std::abs(a[piv][p]) == 0.0) return 0.0;
        if (piv != p) {
            std::swap(a[p], a[piv]);
            det = -det;
        }
        det *= a[p][p];
        for (long r = p + 1; r < n; ++r) {
            Cplx f = a[r][p] / a[p][p];
            for (long c = p; c < n; ++c) a[r][c] -= f * a[p][c];
        }
    }
    return det;
}

inline Rat det_dispatch(std::vector<std::vector<Rat>> a) { return det_bareiss(std::move(a)); }
inline Cplx det_dispatch(std::vector<std::vector<Cplx>> a) { return det_partial_pivot(std::move(a)); }

} // namespace detail

/// s_{N^k}[A] = det(h_{N+j-i})_{1<=i,j<=k} via Jacobi-Trudi.
template <class R>
R schur_rect_jacobi_trudi(long N, long k, const HSeries<R>& hs) {
    if (hs.degree_cap() < N + k - 1) throw std::out_of_range("schur_rect_jacobi_trudi: cap exceeded");
    std::vector<std::vector<R>> a(static_cast<size_t>(k), std::vector<R>(static_cast<size_t>(k)));
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j) a[i - 1][j - 1] = hs.at(N + j - i);
    return detail::det_dispatch(std::move(a));
}

/// s_lambda(1^n) by the hook-content product; exact integer.
inline BigInt weyl_dimension(const Partition& la, long n) {
    if (la.length() > n) throw std::invalid_argument("weyl_dimension: length exceeds n");
    CellData cd = cell_data(la);
    Rat v = 1;
    for (size_t t = 0; t < cd.hooks.size(); ++t) v *= Rat(n + cd.contents[t], cd.hooks[t]);
    if (denominator(v) != 1) throw std::logic_error("weyl_dimension: non-integer");
    return numerator(v);
}

/// Skew Schur s_{lambda/mu}(1^m): det(h_{lambda_i - mu_j - i + j}[1^m]).
inline BigInt skew_schur_ones(const Partition& la, const Partition& mu, long m) {
    if (!la.contains(mu)) throw std::invalid_argument("skew_schur_ones: mu not contained in lambda");
    long L = la.length();
    if (L == 0) return 1;
    std::vector<std::vector<Rat>> a(static_cast<size_t>(L), std::vector<Rat>(static_cast<size_t>(L)));
    for (long i = 1; i <= L; ++i)
        for (long j = 1; j <= L; ++j)
            a[i - 1][j - 1] = Rat(h_ones_int(la.part(i - 1) - mu.part(j - 1) - i + j, m));
    Rat d = detail::det_bareiss(std::move(a));
    if (denominator(d) != 1) throw std::logic_error("skew_schur_ones: non-integer");
    return numerator(d);
}

namespace detail {
inline BigInt kostka_rec(const Partition& la, const std::vector<long>& mu, size_t upto,
                         std::map<std::pair<std::vector<long>, size_t>, BigInt>& memo) {
    if (la.size() == 0) {
        for (size_t t = 0; t < upto; ++t)
            if (mu[t] != 0) return 0;
        return 1;
    }
    if (upto == 0) return 0;
    auto key = std::make_pair(la.parts, upto);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (const Partition& nu : horizontal_strip_predecessors(la, mu[upto - 1]))
        total += kostka_rec(nu, mu, upto - 1, memo);
    memo[key] = total;
    return total;
}
} // namespace detail

/// Kostka number K_{lambda, mu}: SSYT of shape lambda, content mu (mu any composition of |lambda|).
inline BigInt kostka(const Partition& la, const std::vector<long>& mu) {
    long s = 0;
    for (long x : mu) {
        if (x < 0) throw std::invalid_argument("kostka: negative content entry");
        s += x;
    }
    if (s != la.size()) throw std::invalid_argument("kostka: content size mismatch");
    std::map<std::pair<std::vector<long>, size_t>, BigInt> memo;
    return detail::kostka_rec(la, mu, mu.size(), memo);
}

} // namespace cuelab
