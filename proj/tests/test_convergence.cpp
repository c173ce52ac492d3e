#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuelab/convergence.hpp"

using namespace cuelab;

TEST_CASE("finite-N values route to the exact functionals") {
    LimitFunctionalSpec spec;
    spec.kind = LimitKind::KS;
    spec.k = 2;
    CHECK(finite_n_value(spec, 4) == Rat(ks_moment(4, 2)));

    spec.kind = LimitKind::SC;
    spec.rho = Rat(1, 2);
    CHECK(finite_n_value(spec, 6) == Rat(secular_moment(6, 3, 2)));
    CHECK_THROWS_AS(finite_n_value(spec, 5), std::invalid_argument); // rho*N not integral

    spec.kind = LimitKind::KR3G;
    spec.c = Rat(1);
    CHECK(finite_n_value(spec, 5) == Rat(kr3g_moment(5, 5, 2)));

    spec.kind = LimitKind::MOM;
    spec.beta = 1;
    CHECK(finite_n_value(spec, 3) == Rat(mom_moment(3, 2, 1)));

    spec.kind = LimitKind::RATIO;
    CHECK_THROWS_AS(finite_n_value(spec, 4), std::invalid_argument);
}

TEST_CASE("rescaled table decreases toward the constant") {
    LimitFunctionalSpec spec;
    spec.kind = LimitKind::KS;
    spec.k = 2;
    auto rows = convergence_table(spec, {8, 16, 32, 64});
    double target = 1.0 / 12.0;
    double prev = 1e9;
    for (const auto& r : rows) {
        double err = std::abs(r.rescaled - target);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 0.02);
}

TEST_CASE("richardson extrapolation") {
    // exact first-order model v_N = a + b/N is resolved exactly
    std::vector<std::pair<long, double>> pairs{{10, 3.0 + 5.0 / 10.0}, {20, 3.0 + 5.0 / 20.0}, {40, 3.0 + 5.0 / 40.0}};
    RichardsonResult r = richardson(pairs);
    CHECK(std::abs(r.value - 3.0) < 1e-12);
    CHECK(r.spread < 1e-12);
    CHECK(r.extrapolants.size() == 2);
    CHECK_THROWS_AS(richardson({{10, 1.0}, {30, 1.0}}), std::invalid_argument);

    // applied to the real sequence it lands within 1% of 1/12
    LimitFunctionalSpec spec;
    spec.kind = LimitKind::KS;
    spec.k = 2;
    auto rows = convergence_table(spec, {50, 100, 200});
    std::vector<std::pair<long, double>> pr;
    for (const auto& row : rows) pr.push_back({row.N, row.rescaled});
    CHECK(std::abs(richardson(pr).value - 1.0 / 12.0) < 0.01 / 12.0);
}
