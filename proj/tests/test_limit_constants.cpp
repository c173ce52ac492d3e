#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuelab/exact_functionals.hpp"
#include "cuelab/limit_constants.hpp"

using namespace cuelab;

TEST_CASE("Barnes-quotient constants") {
    CHECK(barnes_mk(1) == 1);
    CHECK(barnes_mk(2) == Rat(1, 12));
    CHECK(barnes_mk(3) == Rat(1, 8640));
    CHECK(barnes_mk(4) == Rat(1, 870912000));
    for (long k = 2; k <= 4; ++k) CHECK(hankel_ks(k) == barnes_mk(k));
}

TEST_CASE("exact spline constants") {
    CHECK(sc_constant_exact(Rat(1, 2)) == Rat(1, 2));
    CHECK(sc_constant_exact(Rat(1, 3)) == sc_constant_exact(Rat(2, 3))); // rho <-> 1-rho symmetry
    CHECK(kr3g_constant_exact(Rat(1)) == Rat(1, 6));
    CHECK(kr3g_constant_exact(Rat(1, 2)) == kr3g_constant_exact(Rat(3, 2))); // c <-> 2-c symmetry
    CHECK(vol_birkhoff2_exact() == 1);
    CHECK(vol_subbirkhoff1_exact() == 1);
    CHECK_THROWS_AS(sc_constant_exact(Rat(1)), std::domain_error);
}

TEST_CASE("quadrature routes hit the exact targets") {
    LimitEstimate ks = ks_quad_k2(1e-3);
    CHECK(std::abs(ks.value.real() - 1.0 / 12.0) < 1e-3);

    // three-way sub-Birkhoff volume at k = 2: spline-free quadrature, the exact
    // mid-coefficient route at rho = 1/2 scaled per the volume identity, and 1/6
    LimitEstimate vs2 = vol_subbirkhoff2_quad();
    CHECK(std::abs(vs2.value.real() - 1.0 / 6.0) < 2e-3);
    CHECK(std::abs(vs2.value.real() - to_double(kr3g_constant_exact(Rat(1)))) < 2e-3);

    LimitEstimate zt = zt_k2_quad(Rat(1, 2));
    CHECK(std::abs(zt.value.real() - 1.0 / 96.0) < 1e-4);
    CHECK(std::abs(zt.value.imag()) < 1e-4);
}

TEST_CASE("hypergeometric series") {
    for (double z = 0.0; z < 0.95; z += 0.13) CHECK(std::abs(hypergeom_2f1_kk1(1, z) - 1.0 / (1.0 - z)) < 1e-11);
    // 2F1(2,2;1;z) = (1+z)/(1-z)^3
    for (double z : {0.1, 0.4, 0.7})
        CHECK(std::abs(hypergeom_2f1_kk1(2, z) - (1.0 + z) / std::pow(1.0 - z, 3)) < 1e-10);
    CHECK_THROWS_AS(hypergeom_2f1_kk1(2, 1.0), std::domain_error);
}

TEST_CASE("limiting autocorrelation matches the rescaled finite-N determinant") {
    for (double d : {0.2, 0.7, 1.4}) {
        long N = 1024;
        std::vector<Cplx> xs{std::exp(Cplx(0.0, 2.0 * M_PI * d / static_cast<double>(N)))};
        std::vector<Cplx> ys{Cplx(1.0, 0.0)};
        Cplx fin = autocorr_det(N, xs, ys) / static_cast<double>(N + 1);
        Cplx lim = autocorr_limit_k1(d, 0.0);
        CHECK(std::abs(fin - lim) < 0.02 * std::abs(lim) + 1e-6);
    }
}

TEST_CASE("dispatcher") {
    LimitFunctionalSpec spec;
    spec.kind = LimitKind::KS;
    spec.k = 2;
    LimitEstimate e = evaluate_constant(spec);
    CHECK(e.exact);
    CHECK(std::abs(e.value.real() - 1.0 / 12.0) < 1e-15);

    spec.kind = LimitKind::MOM;
    spec.k = 1;
    spec.beta = 2;
    CHECK(std::abs(evaluate_constant(spec).value.real() - 1.0 / 12.0) < 1e-15);

    spec.kind = LimitKind::ZT;
    spec.k = 1;
    spec.rho = Rat(1, 3);
    LimitEstimate z1 = evaluate_constant(spec);
    CHECK(z1.exact);
    CHECK(std::abs(z1.value.real() - 1.0 / 3.0) < 1e-15);

    spec.kind = LimitKind::AUTOCORR;
    spec.X = {0.4};
    spec.Y = {0.0};
    CHECK(std::abs(evaluate_constant(spec).value - autocorr_limit_k1(0.4, 0.0)) < 1e-14);

    spec.kind = LimitKind::SC;
    spec.k = 3;
    CHECK_THROWS_AS(evaluate_constant(spec), std::runtime_error);
}

TEST_CASE("order exponents") {
    LimitFunctionalSpec spec;
    spec.k = 3;
    spec.kind = LimitKind::KS;
    CHECK(order_exponent(spec) == 9);
    spec.kind = LimitKind::SC;
    CHECK(order_exponent(spec) == 4);
    spec.kind = LimitKind::KR3G;
    CHECK(order_exponent(spec) == 8);
    spec.kind = LimitKind::MOM;
    spec.k = 2;
    spec.beta = 2;
    CHECK(order_exponent(spec) == 15);
}
