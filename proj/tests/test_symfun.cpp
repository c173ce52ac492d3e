#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuelab/symfun.hpp"

using namespace cuelab;

TEST_CASE("h-series of point alphabets") {
    HSeries<Rat> hs = hseries_from_points<Rat>({Rat(1), Rat(2)}, 4);
    // h_m(1, 2) = 2^{m+1} - 1
    for (long m = 0; m <= 4; ++m) CHECK(hs.at(m) == pow_rat(Rat(2), m + 1) - 1);
    CHECK(hs.at(-3) == 0);
    CHECK_THROWS_AS(hs.at(5), std::out_of_range);
}

TEST_CASE("h-series of repeated ones") {
    for (long n = 1; n <= 5; ++n) {
        HSeries<Rat> hs = hseries_ones(Rat(n), 6);
        for (long m = 0; m <= 6; ++m) CHECK(hs.h[static_cast<size_t>(m)] == Rat(h_ones_int(m, n)));
    }
    // fractional kappa: h_m[1^{1/2}] = (1/2)(3/2)...(m-1/2)/m!
    HSeries<Rat> half = hseries_ones(Rat(1, 2), 3);
    CHECK(half.at(1) == Rat(1, 2));
    CHECK(half.at(2) == Rat(3, 8));
    CHECK(half.at(3) == Rat(5, 16));
}

TEST_CASE("supersymmetric h-series cancels equal alphabets") {
    std::vector<Rat> pts{Rat(2), Rat(3, 2)};
    HSeries<Rat> s = hseries_supersym(pts, pts, 5);
    CHECK(s.at(0) == 1);
    for (long m = 1; m <= 5; ++m) CHECK(s.at(m) == 0);
}

TEST_CASE("rectangular Schur via Jacobi-Trudi matches the dimension formula") {
    for (long N = 1; N <= 6; ++N)
        for (long k = 1; k <= 3; ++k)
            for (long n = k; n <= k + 3; ++n) {
                HSeries<Rat> hs = hseries_ones(Rat(n), N + k - 1);
                CHECK(schur_rect_jacobi_trudi(N, k, hs) == Rat(weyl_dimension(Partition::rect(N, k), n)));
            }
}

TEST_CASE("determinants") {
    CHECK(detail::det_bareiss({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
    CHECK(detail::det_bareiss({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
    CHECK(detail::det_bareiss({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
    Cplx d = detail::det_partial_pivot({{Cplx(0, 1), Cplx(1, 0)}, {Cplx(1, 0), Cplx(0, 1)}});
    CHECK(std::abs(d - Cplx(-2.0, 0.0)) < 1e-14);
}

TEST_CASE("skew Schur in m letters") {
    // s_{la/empty}(1^m) = s_la(1^m), m at least the number of rows
    for (long m = 2; m <= 4; ++m) {
        CHECK(skew_schur_ones(Partition({2, 1}), Partition(), m) == weyl_dimension(Partition({2, 1}), m));
        CHECK(skew_schur_ones(Partition({3, 2}), Partition(), m) == weyl_dimension(Partition({3, 2}), m));
    }
    // single-row skew of a row: s_{(a)/(b)}(1^m) = h_{a-b}(1^m)
    CHECK(skew_schur_ones(Partition({5}), Partition({2}), 3) == h_ones_int(3, 3));
    CHECK_THROWS_AS(skew_schur_ones(Partition({1}), Partition({2}), 2), std::invalid_argument);
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka(Partition({2, 1}), {2, 1}) == 1);
    CHECK(kostka(Partition({3}), {1, 1, 1}) == 1);
    CHECK(kostka(Partition({1, 1, 1}), {1, 1, 1}) == 1);
    CHECK(kostka(Partition({1, 1, 1}), {2, 1}) == 0);
    // sum over content rearrangements is invariant; s_la(1^n) = sum_mu K_{la,mu} over weak compositions
    // spot check: K_{la, 1^n} = number of SYT
    for (long n = 2; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            CHECK(kostka(la, std::vector<long>(static_cast<size_t>(n), 1)) == syt_count(la));
}
