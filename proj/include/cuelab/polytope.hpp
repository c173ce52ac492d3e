#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuelab/partitions.hpp"
#include "cuelab/rational.hpp"

namespace cuelab {

/// Multivariate polynomial with per-variable degree caps; products are truncated to the caps.
template <class T = BigInt>
struct BoundedMultiPoly {
    std::vector<long> caps;   // per-variable max exponent
    std::vector<T> c;         // dense, mixed-radix indexed

    explicit BoundedMultiPoly(std::vector<long> caps_) : caps(std::move(caps_)) {
        size_t n = 1;
        for (long cap : caps) n *= static_cast<size_t>(cap + 1);
        c.assign(n, T(0));
    }

    size_t index(const std::vector<long>& e) const {
        size_t ix = 0;
        for (size_t v = 0; v < caps.size(); ++v) ix = ix * static_cast<size_t>(caps[v] + 1) + static_cast<size_t>(e[v]);
        return ix;
    }
    void decode(size_t ix, std::vector<long>& e) const {
        for (size_t v = caps.size(); v-- > 0;) {
            e[v] = static_cast<long>(ix % static_cast<size_t>(caps[v] + 1));
            ix /= static_cast<size_t>(caps[v] + 1);
        }
    }
    T& coeff(const std::vector<long>& e) { return c[index(e)]; }
    const T& coeff(const std::vector<long>& e) const { return c[index(e)]; }

    BoundedMultiPoly mul(const BoundedMultiPoly& o) const {
        BoundedMultiPoly r(caps);
        std::vector<long> ea(caps.size()), eb(caps.size()), es(caps.size());
        for (size_t ia = 0; ia < c.size(); ++ia) {
            if (c[ia] == 0) continue;
            decode(ia, ea);
            for (size_t ib = 0; ib < o.c.size(); ++ib) {
                if (o.c[ib] == 0) continue;
                o.decode(ib, eb);
                bool ok = true;
                for (size_t v = 0; v < caps.size(); ++v) {
                    es[v] = ea[v] + eb[v];
                    if (es[v] > caps[v]) { ok = false; break; }
                }
                if (ok) r.c[r.index(es)] += c[ia] * o.c[ib];
            }
        }
        return r;
    }
};

namespace detail {
// All monomials of total degree exactly d within the caps, coefficient 1.
template <class T>
void add_homogeneous(BoundedMultiPoly<T>& p, long d, size_t var, long left, std::vector<long>& e) {
    if (var + 1 == p.caps.size()) {
        if (left <= p.caps[var]) {
            e[var] = left;
            p.coeff(e) += T(1);
        }
        return;
    }
    long hi = std::min(left, p.caps[var]);
    for (long a = 0; a <= hi; ++a) {
        e[var] = a;
        add_homogeneous(p, d, var + 1, left - a, e);
    }
}
} // namespace detail

/// h_d of the point alphabet {x_1..x_k}: sum of all monomials of total degree d.
template <class T = BigInt>
BoundedMultiPoly<T> homogeneous_poly(long k, long d, const std::vector<long>& caps) {
    BoundedMultiPoly<T> p(caps);
    std::vector<long> e(static_cast<size_t>(k), 0);
    detail::add_homogeneous(p, d, 0, d, e);
    return p;
}

/// L(t, B_k) = [x_1^t ... x_k^t] h_t[X]^k.
inline BigInt ehrhart_birkhoff(long k, long t) {
    if (k < 1 || t < 0) throw std::invalid_argument("ehrhart_birkhoff: bad arguments");
    if (t == 0) return 1;
    std::vector<long> caps(static_cast<size_t>(k), t);
    BoundedMultiPoly<BigInt> ht = homogeneous_poly<BigInt>(k, t, caps);
    BoundedMultiPoly<BigInt> acc = ht;
    for (long i = 1; i < k; ++i) acc = acc.mul(ht);
    return acc.coeff(std::vector<long>(static_cast<size_t>(k), t));
}

/// L(t, S_k) = [X^t] (prod_i sum_{a<=t} x_i^a) * h_t[1+X]^k.
/// (A tempting h_t[1+X]^{k+1} closed form over-truncates the H[X] factor; see README.)
inline BigInt ehrhart_subbirkhoff(long k, long t) {
    if (k < 1 || t < 0) throw std::invalid_argument("ehrhart_subbirkhoff: bad arguments");
    if (t == 0) return 1;
    std::vector<long> caps(static_cast<size_t>(k), t);
    BoundedMultiPoly<BigInt> hle(caps); // h_t[1+X] = all monomials of total degree <= t
    {
        std::vector<long> e(static_cast<size_t>(k), 0);
        for (long d = 0; d <= t; ++d) detail::add_homogeneous(hle, d, 0, d, e);
    }
    BoundedMultiPoly<BigInt> full(caps); // prod_i (1 + x_i + ... + x_i^t)
    for (auto& v : full.c) v = 1;
    BoundedMultiPoly<BigInt> acc = full;
    for (long i = 0; i < k; ++i) acc = acc.mul(hle);
    return acc.coeff(std::vector<long>(static_cast<size_t>(k), t));
}

/// L(l, T_{lambda,mu}) = [X^{l*lambda}] prod_j h_{l*mu_j}[X]  (X has one variable per row).
inline BigInt ehrhart_transport(const Partition& la, const Partition& mu, long ell) {
    if (la.size() != mu.size()) throw std::invalid_argument("ehrhart_transport: |lambda| != |mu|");
    long m = la.length();
    if (m == 0) return 1;
    std::vector<long> caps(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) caps[static_cast<size_t>(i)] = ell * la.parts[static_cast<size_t>(i)];
    BoundedMultiPoly<BigInt> acc(caps);
    acc.c[acc.index(std::vector<long>(static_cast<size_t>(m), 0))] = 1;
    for (long j = 0; j < mu.length(); ++j)
        acc = acc.mul(homogeneous_poly<BigInt>(m, ell * mu.parts[static_cast<size_t>(j)], caps));
    std::vector<long> target(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) target[static_cast<size_t>(i)] = ell * la.parts[static_cast<size_t>(i)];
    return acc.coeff(target);
}

enum class SumMode { Equal, AtMost };

namespace detail {
inline void brute_rec(const std::vector<long>& rows, const std::vector<long>& cols, SumMode mode,
                      size_t i, size_t j, long row_left, std::vector<long>& col_left, BigInt& count) {
    if (i == rows.size()) {
        if (mode == SumMode::AtMost) {
            count += 1;
            return;
        }
        for (long cl : col_left)
            if (cl != 0) return;
        count += 1;
        return;
    }
    if (j == cols.size()) {
        if (mode == SumMode::Equal && row_left != 0) return;
        brute_rec(rows, cols, mode, i + 1, 0, i + 1 < rows.size() ? rows[i + 1] : 0, col_left, count);
        return;
    }
    long hi = std::min(row_left, col_left[j]);
    for (long v = 0; v <= hi; ++v) {
        col_left[j] -= v;
        brute_rec(rows, cols, mode, i, j + 1, row_left - v, col_left, count);
        col_left[j] += v;
    }
}
} // namespace detail

/// Ground-truth oracle: direct enumeration of nonnegative integer matrices with the given
/// row/column sums (Equal) or bounds (AtMost).
inline BigInt brute_force_count(const std::vector<long>& rows, const std::vector<long>& cols, SumMode mode) {
    for (long r : rows)
        if (r < 0) throw std::invalid_argument("brute_force_count: negative sum");
    for (long c0 : cols)
        if (c0 < 0) throw std::invalid_argument("brute_force_count: negative sum");
    BigInt count = 0;
    std::vector<long> col_left = cols;
    detail::brute_rec(rows, cols, mode, 0, 0, rows.empty() ? 0 : rows[0], col_left, count);
    return count;
}

/// Exact interpolating polynomial with rational coefficients.
struct EhrhartPolynomial {
    std::vector<Rat> coeffs; // ascending
    std::string descriptor;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    Rat leading() const { return coeffs.back(); }
    Rat eval(const Rat& t) const {
        Rat v = 0;
        for (size_t p = coeffs.size(); p-- > 0;) v = v * t + coeffs[p];
        return v;
    }
};

/// Exact polynomial through the samples (first degree+1 define it; the rest must be consistent).
inline EhrhartPolynomial interpolate_ehrhart(const std::vector<std::pair<long, BigInt>>& samples,
                                             long degree, std::string descriptor = "") {
    if (static_cast<long>(samples.size()) < degree + 1)
        throw std::invalid_argument("interpolate_ehrhart: need degree+1 samples");
    // Newton divided differences on the first degree+1 nodes
    size_t n = static_cast<size_t>(degree + 1);
    std::vector<Rat> xs(n), dd(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = samples[i].first;
        dd[i] = Rat(samples[i].second);
    }
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    // expand Newton form into monomial coefficients
    std::vector<Rat> coeffs{dd[n - 1]};
    for (size_t lvl = n - 1; lvl-- > 0;) {
        // coeffs = coeffs*(x - xs[lvl]) + dd[lvl]
        coeffs.insert(coeffs.begin(), Rat(0));
        for (size_t p = 0; p + 1 < coeffs.size(); ++p) coeffs[p] -= xs[lvl] * coeffs[p + 1];
        coeffs[0] += dd[lvl];
    }
    EhrhartPolynomial poly{std::move(coeffs), std::move(descriptor)};
    while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();
    for (const auto& s : samples)
        if (poly.eval(Rat(s.first)) != Rat(s.second))
            throw std::runtime_error("interpolate_ehrhart: inconsistent extra sample");
    return poly;
}

} // namespace cuelab
