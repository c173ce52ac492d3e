#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "cuelab/rational.hpp"

namespace cuelab {

using Poly = std::vector<Rat>; // ascending coefficients

namespace polyops {

inline Rat eval(const Poly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}
inline void add_scaled(Poly& a, const Poly& b, const Rat& s) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}
inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
inline Poly derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return r;
}
inline Poly antiderivative(const Poly& p) {
    Poly r(p.size() + 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / Rat(static_cast<long>(i + 1));
    return r;
}
/// p(alpha*x + beta)
inline Poly compose_linear(const Poly& p, const Rat& alpha, const Rat& beta) {
    Poly r{Rat(0)};
    Poly lin{beta, alpha};
    Poly pw{Rat(1)};
    for (size_t i = 0; i < p.size(); ++i) {
        add_scaled(r, pw, p[i]);
        if (i + 1 < p.size()) pw = mul(pw, lin);
    }
    return r;
}
/// (x - c)^e expanded
inline Poly shifted_power(const Rat& c, long e) {
    Poly r{Rat(1)};
    Poly lin{-c, Rat(1)};
    for (long i = 0; i < e; ++i) r = mul(r, lin);
    return r;
}

} // namespace polyops

/// Exact piecewise polynomial with rational breakpoints; zero outside its support.
struct PiecewisePoly {
    std::vector<Rat> breaks;       // size M+1, strictly increasing
    std::vector<Poly> pieces;      // size M, polynomial in x on [breaks[i], breaks[i+1]]

    Rat support_lo() const { return breaks.front(); }
    Rat support_hi() const { return breaks.back(); }

    /// Point evaluation. side < 0: limit from the left, side > 0: from the right,
    /// side == 0: require the two one-sided values to coincide.
    Rat eval(const Rat& x, int side = 0) const {
        auto piece_value = [&](long i) { return polyops::eval(pieces[static_cast<size_t>(i)], x); };
        if (x < breaks.front() || x > breaks.back()) return 0;
        long M = static_cast<long>(pieces.size());
        // locate: index of first break > x
        long hi = static_cast<long>(std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin());
        bool at_break = (hi > 0 && breaks[static_cast<size_t>(hi - 1)] == x);
        if (!at_break) return piece_value(hi - 1);
        long left = hi - 2;  // piece ending at x
        long right = hi - 1; // piece starting at x
        Rat lv = (left >= 0) ? piece_value(left) : Rat(0);
        Rat rv = (right < M) ? piece_value(right) : Rat(0);
        if (side < 0) return lv;
        if (side > 0) return rv;
        if (lv != rv) throw std::domain_error("PiecewisePoly::eval: one-sided values differ; pick a side");
        return lv;
    }

    PiecewisePoly derivative() const {
        PiecewisePoly d;
        d.breaks = breaks;
        for (const Poly& p : pieces) d.pieces.push_back(polyops::derivative(p));
        return d;
    }

    /// m-th derivative at x (one-sided as in eval).
    Rat eval_deriv(long m, const Rat& x, int side = 0) const {
        PiecewisePoly d = *this;
        for (long i = 0; i < m; ++i) d = d.derivative();
        return d.eval(x, side);
    }

    Rat integrate_total() const {
        Rat s = 0;
        for (size_t i = 0; i < pieces.size(); ++i) {
            Poly A = polyops::antiderivative(pieces[i]);
            s += polyops::eval(A, breaks[i + 1]) - polyops::eval(A, breaks[i]);
        }
        return s;
    }

    /// Density of alpha*W + beta where W has this density (alpha != 0).
    PiecewisePoly affine_image(const Rat& alpha, const Rat& beta) const {
        if (alpha == 0) throw std::invalid_argument("affine_image: alpha = 0");
        Rat inva = 1 / alpha;
        Rat absinva = alpha > 0 ? inva : -inva;
        PiecewisePoly r;
        size_t M = pieces.size();
        if (alpha > 0) {
            for (const Rat& b : breaks) r.breaks.push_back(alpha * b + beta);
            for (size_t i = 0; i < M; ++i) {
                Poly p = polyops::compose_linear(pieces[i], inva, -beta * inva);
                for (Rat& cc : p) cc *= absinva;
                r.pieces.push_back(std::move(p));
            }
        } else {
            for (size_t i = breaks.size(); i-- > 0;) r.breaks.push_back(alpha * breaks[i] + beta);
            for (size_t i = M; i-- > 0;) {
                Poly p = polyops::compose_linear(pieces[i], inva, -beta * inva);
                for (Rat& cc : p) cc *= absinva;
                r.pieces.push_back(std::move(p));
            }
        }
        return r;
    }

    /// Exact convolution (density of the sum of independent variables).
    PiecewisePoly convolve(const PiecewisePoly& g) const {
        const PiecewisePoly& f = *this;
        std::vector<Rat> bs;
        for (const Rat& a : f.breaks)
            for (const Rat& b : g.breaks) bs.push_back(a + b);
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        PiecewisePoly h;
        h.breaks = bs;
        for (size_t iv = 0; iv + 1 < bs.size(); ++iv) {
            Rat mid = (bs[iv] + bs[iv + 1]) / 2;
            Poly acc{Rat(0)};
            for (size_t fi = 0; fi < f.pieces.size(); ++fi) {
                Rat p = f.breaks[fi], q = f.breaks[fi + 1];
                for (size_t gi = 0; gi < g.pieces.size(); ++gi) {
                    Rat r0 = g.breaks[gi], s0 = g.breaks[gi + 1];
                    // t-range: [max(p, x-s0), min(q, x-r0)]; choice constant on this x-interval
                    bool lo_is_p = (p >= mid - s0);
                    bool hi_is_q = (q <= mid - r0);
                    Rat lo_mid = lo_is_p ? p : mid - s0;
                    Rat hi_mid = hi_is_q ? q : mid - r0;
                    if (lo_mid >= hi_mid) continue;
                    // A(t; x) = antiderivative in t of F(t) * G(x - t)
                    const Poly& F = f.pieces[fi];
                    const Poly& G = g.pieces[gi];
                    // bivariate: tcoef[r] = poly in x
                    std::vector<Poly> prod(F.size() + G.size(), Poly{});
                    for (size_t j = 0; j < G.size(); ++j) {
                        // G_j * (x - t)^j = G_j * sum_r C(j,r) (-1)^r t^r x^{j-r}
                        for (size_t r = 0; r <= j; ++r) {
                            Rat cjr = Rat(binomial(BigInt(static_cast<long>(j)), static_cast<long>(r)));
                            if (r % 2) cjr = -cjr;
                            for (size_t fp = 0; fp < F.size(); ++fp) {
                                size_t tp = r + fp;
                                size_t xp = j - r;
                                if (prod[tp].size() <= xp) prod[tp].resize(xp + 1, Rat(0));
                                prod[tp][xp] += G[j] * cjr * F[fp];
                            }
                        }
                    }
                    // antiderivative in t
                    std::vector<Poly> anti(prod.size() + 1, Poly{});
                    for (size_t tp = 0; tp < prod.size(); ++tp) {
                        anti[tp + 1] = prod[tp];
                        for (Rat& cc : anti[tp + 1]) cc /= Rat(static_cast<long>(tp + 1));
                    }
                    // evaluate at t = bound(x), bound either constant or x + beta
                    auto eval_at = [&](bool is_const, const Rat& cval, const Rat& xshift) {
                        Poly res{Rat(0)};
                        Poly tpow{Rat(1)}; // (bound)^tp as poly in x
                        for (size_t tp = 0; tp < anti.size(); ++tp) {
                            if (!anti[tp].empty()) add_scaled_poly(res, anti[tp], tpow);
                            if (tp + 1 < anti.size()) {
                                if (is_const)
                                    for (Rat& cc : tpow) cc *= cval;
                                else
                                    tpow = polyops::mul(tpow, Poly{xshift, Rat(1)});
                            }
                        }
                        return res;
                    };
                    Poly hi_poly = hi_is_q ? eval_at(true, q, 0) : eval_at(false, 0, -r0);
                    Poly lo_poly = lo_is_p ? eval_at(true, p, 0) : eval_at(false, 0, -s0);
                    polyops::add_scaled(acc, hi_poly, Rat(1));
                    polyops::add_scaled(acc, lo_poly, Rat(-1));
                }
            }
            h.pieces.push_back(std::move(acc));
        }
        return h;
    }

    /// int f(x) e^{2 i pi tau x} dx (machine precision).
    Cplx fourier(double tau) const {
        const double omega = 2.0 * M_PI * tau;
        const Cplx iw(0.0, omega);
        Cplx total = 0.0;
        for (size_t i = 0; i < pieces.size(); ++i) {
            double a = to_double(breaks[i]), b = to_double(breaks[i + 1]);
            const Poly& p = pieces[i];
            if (std::abs(omega) * (b - a) < 4.0) {
                // Taylor around the midpoint
                double m = 0.5 * (a + b), hw = 0.5 * (b - a);
                Cplx phase = std::exp(Cplx(0.0, omega * m));
                // moments of u on [-hw, hw]
                std::vector<double> umom(40);
                for (size_t n = 0; n < umom.size(); ++n)
                    umom[n] = (n % 2 == 1) ? 0.0 : 2.0 * std::pow(hw, static_cast<double>(n) + 1) / (static_cast<double>(n) + 1);
                Cplx piece = 0.0;
                Cplx iwn = 1.0;
                int small_run = 0;
                for (size_t n = 0; n < 36; ++n) {
                    // sum_p p_p (u+m)^p u^n term
                    double s = 0.0;
                    for (size_t pp = 0; pp < p.size(); ++pp) {
                        // (u+m)^pp -> sum_r C(pp,r) m^{pp-r} u^r; combine with u^n
                        double c = 1.0;
                        for (size_t r = 0; r <= pp; ++r) {
                            s += to_double(p[pp]) * c * std::pow(m, static_cast<double>(pp - r)) * umom[r + n];
                            c = c * static_cast<double>(pp - r) / static_cast<double>(r + 1);
                        }
                    }
                    Cplx term = iwn * s;
                    piece += term;
                    // odd moments vanish, so require two consecutive negligible terms
                    small_run = (std::abs(term) < 1e-18 * (1.0 + std::abs(piece))) ? small_run + 1 : 0;
                    if (small_run >= 2 && n > 4) break;
                    iwn *= iw / static_cast<double>(n + 1);
                }
                total += phase * piece;
            } else {
                // upward recurrence I_p = [x^p e^{iwx}]_a^b / (iw) - (p/(iw)) I_{p-1}
                Cplx ea = std::exp(Cplx(0.0, omega * a)), eb = std::exp(Cplx(0.0, omega * b));
                std::vector<Cplx> I(p.size());
                I[0] = (eb - ea) / iw;
                double bp = 1.0, ap = 1.0;
                for (size_t n = 1; n < p.size(); ++n) {
                    bp *= b;
                    ap *= a;
                    I[n] = (bp * eb - ap * ea) / iw - (static_cast<double>(n) / iw) * I[n - 1];
                }
                for (size_t n = 0; n < p.size(); ++n) total += to_double(p[n]) * I[n];
            }
        }
        return total;
    }

private:
    static void add_scaled_poly(Poly& a, const Poly& b, const Poly& s) {
        Poly bs = polyops::mul(b, s);
        polyops::add_scaled(a, bs, Rat(1));
    }
};

/// Exact density of sum a_i U_i + shift, U_i iid uniform on [0,1] (convolution-exact,
/// normalized as a probability density with no extra combinatorial factor).
inline PiecewisePoly uniform_sum_spline(std::vector<Rat> weights, Rat shift) {
    if (weights.empty()) throw std::invalid_argument("uniform_sum_spline: no weights");
    for (Rat& a : weights) {
        if (a == 0) throw std::invalid_argument("uniform_sum_spline: zero weight");
        if (a < 0) { // a*U has the law of |a|*U + a
            shift += a;
            a = -a;
        }
    }
    long n = static_cast<long>(weights.size());
    // signed counts of subset sums
    std::map<Rat, long> sums{{Rat(0), 1}};
    for (const Rat& a : weights) {
        std::map<Rat, long> next;
        for (const auto& [s, cnt] : sums) {
            next[s] += cnt;
            next[s + a] -= cnt;
        }
        sums = std::move(next);
    }
    Rat c0 = 1;
    for (long i = 2; i < n; ++i) c0 *= i; // (n-1)!
    for (const Rat& a : weights) c0 *= a;
    c0 = 1 / c0;

    PiecewisePoly f;
    for (const auto& [s, cnt] : sums) f.breaks.push_back(shift + s);
    Poly run{Rat(0)};
    size_t idx = 0;
    for (const auto& [s, cnt] : sums) {
        if (cnt != 0) {
            Poly tp = polyops::shifted_power(shift + s, n - 1);
            polyops::add_scaled(run, tp, c0 * cnt);
        }
        if (idx + 1 < sums.size()) f.pieces.push_back(run);
        ++idx;
    }
    return f;
}

/// Beta(a, b) density (integer parameters): polynomial on [0,1].
inline PiecewisePoly beta_density(long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("beta_density: parameters must be >= 1");
    Rat norm = Rat(factorial(a + b - 1)) / Rat(factorial(a - 1) * factorial(b - 1));
    Poly p = polyops::shifted_power(Rat(0), a - 1); // x^{a-1}
    Poly q{Rat(1)};
    Poly one_minus{Rat(1), Rat(-1)};
    for (long i = 0; i < b - 1; ++i) q = polyops::mul(q, one_minus);
    Poly full = polyops::mul(p, q);
    for (Rat& cc : full) cc *= norm;
    PiecewisePoly f;
    f.breaks = {Rat(0), Rat(1)};
    f.pieces = {full};
    return f;
}

} // namespace cuelab
