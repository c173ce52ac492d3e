#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuelab/exact_functionals.hpp"
#include "cuelab/rng.hpp"
#include "cuelab/sampler.hpp"

using namespace cuelab;

TEST_CASE("counter RNG is reproducible and splittable") {
    CounterRng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    CounterRng s1 = CounterRng(42).split(1), s2 = CounterRng(42).split(2);
    CHECK(s1.next_u64() != s2.next_u64());
    CounterRng u(7);
    for (int i = 0; i < 1000; ++i) {
        double v = u.uniform();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("dirichlet samples lie on the simplex") {
    CounterRng rng(9);
    double d[3];
    for (int i = 0; i < 200; ++i) {
        rng.dirichlet(3, 2, d);
        double s = d[0] + d[1] + d[2];
        CHECK(std::abs(s - 1.0) < 1e-12);
        for (double v : d) CHECK(v > 0.0);
    }
}

TEST_CASE("functionals of eigenangles") {
    std::vector<double> t{0.0, 0.25, 0.5, 0.75}; // 4th roots of unity
    CHECK(std::abs(functional_trace_sq(t)) < 1e-24);
    CHECK(std::abs(secular_coefficient(t, 4) - Cplx(-1.0, 0.0)) < 1e-12); // e_4 = product = -1
    CHECK(std::abs(secular_coefficient(t, 1)) < 1e-12);
    CHECK(std::abs(functional_z1_pow(t, 1) - 0.0) < 1e-12); // Z(1) vanishes when 1 is an eigenvalue
}

TEST_CASE("chain matches exact low moments") {
    McStat tr = chain_estimate(2, 30000, 1000, 101, [](const std::vector<double>& t) { return functional_trace_sq(t); });
    CHECK(std::abs(tr.mean - 1.0) < 5.0 * tr.stderr_);
    CHECK(tr.acceptance > 0.1);
    CHECK(tr.acceptance < 0.9);

    McStat z1 = chain_estimate(3, 30000, 1000, 102, [](const std::vector<double>& t) { return functional_z1_pow(t, 1); });
    double exact = to_double(Rat(ks_moment(3, 1))); // = 4
    CHECK(std::abs(z1.mean - exact) < 5.0 * z1.stderr_);

    McStat sc = chain_estimate(3, 30000, 1000, 103,
                               [](const std::vector<double>& t) { return std::norm(secular_coefficient(t, 2)); });
    CHECK(std::abs(sc.mean - 1.0) < 5.0 * sc.stderr_);
}

TEST_CASE("chain is deterministic for a fixed seed") {
    auto f = [](const std::vector<double>& t) { return functional_trace_sq(t); };
    McStat a = chain_estimate(3, 2000, 200, 555, f);
    McStat b = chain_estimate(3, 2000, 200, 555, f);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
}
