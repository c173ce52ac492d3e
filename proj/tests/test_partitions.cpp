#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuelab/partitions.hpp"

using namespace cuelab;

TEST_CASE("construction trims and validates") {
    Partition p({3, 2, 0, 0});
    CHECK(p.length() == 2);
    CHECK(p.size() == 5);
    CHECK(p.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition::rect(0, 3).length() == 0);
}

TEST_CASE("conjugate is an involution") {
    Partition p({4, 2, 1});
    CHECK(conjugate(p) == Partition({3, 2, 1, 1}));
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("hooks and contents") {
    CellData cd = cell_data(Partition({2, 1}));
    std::sort(cd.hooks.begin(), cd.hooks.end());
    CHECK(cd.hooks == std::vector<long>({1, 1, 3}));
    std::sort(cd.contents.begin(), cd.contents.end());
    CHECK(cd.contents == std::vector<long>({-1, 0, 1}));
}

TEST_CASE("standard tableaux counts") {
    CHECK(syt_count(Partition({2, 1})) == 2);
    CHECK(syt_count(Partition({3, 2})) == 5);
    CHECK(syt_count(Partition({2, 2, 1})) == 5);
    CHECK(syt_count(Partition()) == 1);
    // sum over partitions of n of d_la^2 = n!
    for (long n = 1; n <= 7; ++n) {
        BigInt s = 0;
        for (const Partition& la : partitions_of(n)) s += syt_count(la) * syt_count(la);
        CHECK(s == factorial(n));
    }
}

TEST_CASE("box enumeration") {
    CHECK(enumerate_box(2, 3, 3).size() == 2); // (3), (2,1)
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
    // total over all sizes = binomial(k+N, k) choose-type count of the full box
    long total = 0;
    for (long m = 0; m <= 6; ++m) total += static_cast<long>(enumerate_box(2, 3, m).size());
    CHECK(total == 10); // partitions fitting in a 2x3 box
}

TEST_CASE("box complement") {
    CHECK(box_complement(Partition({2, 1}), 2, 3) == Partition({2, 1}));
    CHECK(box_complement(Partition(), 2, 3) == Partition({3, 3}));
    CHECK_THROWS_AS(box_complement(Partition({4}), 2, 3), std::invalid_argument);
    // complement is an involution on the box
    for (long m = 0; m <= 6; ++m)
        for (const Partition& mu : enumerate_box(2, 3, m))
            CHECK(box_complement(box_complement(mu, 2, 3), 2, 3) == mu);
}

TEST_CASE("horizontal strips") {
    auto pre = horizontal_strip_predecessors(Partition({3, 1}), 2);
    for (const Partition& nu : pre) {
        CHECK(nu.size() == 2);
        CHECK(Partition({3, 1}).contains(nu));
        // strip condition: nu_i >= la_{i+1}
        for (long i = 0; i < nu.length(); ++i) CHECK(Partition({3, 1}).part(i + 1) <= nu.part(i));
    }
    CHECK(pre.size() == 2); // (2) and (1,1)
}
