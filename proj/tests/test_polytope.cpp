#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuelab/polytope.hpp"

using namespace cuelab;

TEST_CASE("doubly stochastic counts") {
    // L(t, B_2) = t + 1
    for (long t = 0; t <= 6; ++t) CHECK(ehrhart_birkhoff(2, t) == t + 1);
    const long b3[5] = {1, 6, 21, 55, 120};
    for (long t = 0; t <= 4; ++t) CHECK(ehrhart_birkhoff(3, t) == b3[t]);
    for (long k = 1; k <= 3; ++k)
        for (long t = 0; t <= 3; ++t) {
            std::vector<long> sums(static_cast<size_t>(k), t);
            CHECK(ehrhart_birkhoff(k, t) == brute_force_count(sums, sums, SumMode::Equal));
        }
}

TEST_CASE("substochastic counts") {
    const long s2[4] = {1, 7, 26, 70};
    for (long t = 0; t <= 3; ++t) CHECK(ehrhart_subbirkhoff(2, t) == s2[t]);
    for (long k = 1; k <= 2; ++k)
        for (long t = 0; t <= 4; ++t) {
            std::vector<long> sums(static_cast<size_t>(k), t);
            CHECK(ehrhart_subbirkhoff(k, t) == brute_force_count(sums, sums, SumMode::AtMost));
        }
}

TEST_CASE("transportation counts") {
    Partition la({3, 2}), mu({2, 2, 1});
    for (long ell = 1; ell <= 3; ++ell) {
        std::vector<long> rows, cols;
        for (long p : la.parts) rows.push_back(ell * p);
        for (long p : mu.parts) cols.push_back(ell * p);
        CHECK(ehrhart_transport(la, mu, ell) == brute_force_count(rows, cols, SumMode::Equal));
        // transposing the matrix swaps the margins
        CHECK(ehrhart_transport(la, mu, ell) == ehrhart_transport(mu, la, ell));
    }
    CHECK_THROWS_AS(ehrhart_transport(Partition({2}), Partition({3}), 1), std::invalid_argument);
}

TEST_CASE("interpolation recovers the counting polynomial") {
    std::vector<std::pair<long, BigInt>> samples;
    for (long t = 0; t <= 5; ++t) samples.push_back({t, ehrhart_birkhoff(3, t)});
    EhrhartPolynomial p = interpolate_ehrhart(samples, 4, "B3");
    CHECK(p.degree() == 4);
    CHECK(p.leading() == Rat(1, 8));
    for (long t = 6; t <= 8; ++t) CHECK(p.eval(Rat(t)) == Rat(ehrhart_birkhoff(3, t)));
    // inconsistent extra sample is rejected
    samples.push_back({6, ehrhart_birkhoff(3, 6) + 1});
    CHECK_THROWS_AS(interpolate_ehrhart(samples, 4, "bad"), std::runtime_error);
}

TEST_CASE("bounded multivariate polynomial arithmetic") {
    BoundedMultiPoly<BigInt> a({2, 2});
    a.coeff({1, 0}) = 1;
    a.coeff({0, 1}) = 1;
    BoundedMultiPoly<BigInt> sq = a.mul(a);
    CHECK(sq.coeff({2, 0}) == 1);
    CHECK(sq.coeff({1, 1}) == 2);
    CHECK(sq.coeff({0, 2}) == 1);
    BoundedMultiPoly<BigInt> quad = sq.mul(sq);
    CHECK(quad.coeff({2, 2}) == 6); // central binomial of (x+y)^4 within caps
}
