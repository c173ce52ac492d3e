#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuelab/exact_functionals.hpp"

using namespace cuelab;

TEST_CASE("|Z(1)|^{2k} moments") {
    CHECK(ks_moment(1, 1) == 2);
    CHECK(ks_moment(2, 2) == 20);
    CHECK(ks_moment(3, 2) == 50); // (N+1)(N+2)^2(N+3)/12 at N = 3
    for (long N = 1; N <= 10; ++N) CHECK(ks_moment(N, 1) == N + 1);
    CHECK_THROWS_AS(ks_moment(0, 1), std::invalid_argument);
}

TEST_CASE("secular coefficient moments") {
    CHECK(secular_moment(2, 1, 2) == 2);
    CHECK(secular_moment(4, 2, 2) == 3);
    CHECK(secular_moment(6, 3, 2) == 4);
    for (long N = 1; N <= 7; ++N)
        for (long m = 0; m <= N; ++m) {
            CHECK(secular_moment(N, m, 1) == 1);
            CHECK(secular_moment(N, m, 2) == secular_moment(N, N - m, 2)); // sc_m <-> sc_{N-m}
        }
    CHECK_THROWS_AS(secular_moment(3, 4, 1), std::out_of_range);
}

// independent oracle for the coefficient functional: direct Weyl-measure quadrature at N = 2,
// E |[x^m] det(I + xU)^k|^2 with density |e^{i a} - e^{i b}|^2 / (2 (2 pi)^2)
static double kr3g_direct_n2(long m, long k) {
    const long G = 400;
    double total = 0.0;
    for (long i = 0; i < G; ++i)
        for (long j = 0; j < G; ++j) {
            double a = 2.0 * M_PI * (static_cast<double>(i) + 0.5) / static_cast<double>(G);
            double b = 2.0 * M_PI * (static_cast<double>(j) + 0.5) / static_cast<double>(G);
            // coefficients of (1 + x e^{ia})^k (1 + x e^{ib})^k up to degree m
            std::vector<Cplx> poly(static_cast<size_t>(m) + 1, 0.0);
            poly[0] = 1.0;
            for (long rep = 0; rep < 2 * k; ++rep) {
                Cplx z = std::exp(Cplx(0.0, rep < k ? a : b));
                for (long d = m; d >= 1; --d) poly[static_cast<size_t>(d)] += z * poly[static_cast<size_t>(d - 1)];
            }
            double w = std::norm(std::exp(Cplx(0.0, a)) - std::exp(Cplx(0.0, b))) / 2.0;
            total += w * std::norm(poly[static_cast<size_t>(m)]);
        }
    return total / static_cast<double>(G * G);
}

TEST_CASE("coefficient functional vs direct quadrature oracle") {
    CHECK(kr3g_moment(2, 1, 2) == 4);
    for (long k = 1; k <= 3; ++k)
        for (long m = 0; m <= 2 * k; ++m) {
            double direct = kr3g_direct_n2(m, k);
            double exact = to_double(Rat(kr3g_moment(2, m, k)));
            CHECK(std::abs(direct - exact) < 1e-8 * (1.0 + exact));
        }
    for (long N = 1; N <= 5; ++N)
        for (long m = 0; m <= 2 * N; ++m) CHECK(kr3g_moment(N, m, 2) == kr3g_moment(N, 2 * N - m, 2));
}

TEST_CASE("moments of moments reductions") {
    CHECK(mom_moment(1, 2, 1) == 4);
    for (long N = 1; N <= 6; ++N)
        for (long beta = 1; beta <= 2; ++beta) CHECK(mom_moment(N, 1, beta) == ks_moment(N, beta));
    for (long N = 1; N <= 4; ++N) CHECK(mom_moment(N, 2, 1) == kr3g_moment(N, N, 2));
}

TEST_CASE("truncated moments") {
    // lambda = 1 counts substochastic lattice points
    CHECK(truncated_moment_lambda(2, 1, Rat(1)) == 7);
    CHECK(truncated_moment_lambda(2, 2, Rat(1)) == 26);
    // k = 1 geometric closed form
    for (long t = 0; t <= 5; ++t) {
        Rat geo = 0, p = 1;
        for (long m = 0; m <= t; ++m) {
            geo += p;
            p *= Rat(1, 4);
        }
        CHECK(truncated_moment_lambda(1, t, Rat(1, 4)) == geo);
    }
    CHECK(truncated_moment_lambda(3, 0, Rat(2)) == 1);
}

TEST_CASE("ratio and autocorrelation determinants agree where they overlap") {
    // with |Y| = 0 the ratio functional is the plain rectangular Schur moment structure;
    // at a single x it must match h_N of the repeated point alphabet
    long N = 8;
    std::vector<double> X{0.37};
    Cplx r = ratio_moment(N, 1, X, {});
    Cplx p = std::exp(Cplx(0.0, 2.0 * M_PI * X[0] / static_cast<double>(N)));
    Cplx expect = std::pow(p, static_cast<double>(N));
    CHECK(std::abs(r - expect) < 1e-10);
    CHECK_THROWS_AS(ratio_moment(4, 1, {0.1}, {0.1}), std::domain_error);

    // autocorrelation at coincident arguments x = y reduces to E|Z|^2-type positivity
    std::vector<Cplx> xs{std::exp(Cplx(0.0, 0.3)), std::exp(Cplx(0.0, 1.1))};
    Cplx a = autocorr_det(5, xs, xs);
    CHECK(a.real() > 0.0);
    CHECK(std::abs(a.imag()) < 1e-9 * a.real());
    CHECK_THROWS_AS(autocorr_det(3, xs, {xs[0]}), std::invalid_argument);
}

TEST_CASE("derivative-moment expansion pins") {
    CHECK(dehaye_derivative_ratio(1, 1, 0) == 1);
    CHECK(dehaye_derivative_ratio(1, 1, 1) == Rat(-1, 2));
    // r = 1: single cell, content 0 -> k*(-N)/(2k) = -N/2
    for (long N = 1; N <= 5; ++N)
        for (long k = 1; k <= 3; ++k) CHECK(dehaye_derivative_ratio(N, k, 1) == Rat(-N, 2));
}
