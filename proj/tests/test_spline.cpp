#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cuelab/spline.hpp"

using namespace cuelab;

TEST_CASE("uniform sum densities") {
    PiecewisePoly s1 = uniform_sum_spline({Rat(1)}, Rat(0));
    CHECK(s1.eval(Rat(1, 2)) == 1);
    CHECK(s1.integrate_total() == 1);

    PiecewisePoly s2 = uniform_sum_spline({Rat(1), Rat(1)}, Rat(0));
    CHECK(s2.eval(Rat(1), 0) == 1); // triangle peak
    CHECK(s2.eval(Rat(1, 2)) == Rat(1, 2));
    CHECK(s2.eval(Rat(3, 2)) == Rat(1, 2));
    CHECK(s2.integrate_total() == 1);

    PiecewisePoly s4 = uniform_sum_spline(std::vector<Rat>(4, Rat(1)), Rat(0));
    CHECK(s4.eval(Rat(2)) == Rat(2, 3));
    CHECK(s4.eval_deriv(2, Rat(2), 0) == Rat(-2));
    CHECK(s4.integrate_total() == 1);
}

TEST_CASE("negative weights and shifts") {
    // U - U is symmetric around 0
    PiecewisePoly d = uniform_sum_spline({Rat(1), Rat(-1)}, Rat(0));
    CHECK(d.support_lo() == Rat(-1));
    CHECK(d.support_hi() == Rat(1));
    CHECK(d.eval(Rat(1, 3)) == d.eval(Rat(-1, 3)));
    CHECK(d.eval(Rat(0), 0) == 1);
    CHECK(d.integrate_total() == 1);
}

TEST_CASE("affine image and convolution agree with direct construction") {
    PiecewisePoly via_conv = uniform_sum_spline({Rat(1)}, Rat(0)).convolve(uniform_sum_spline({Rat(2)}, Rat(0)));
    PiecewisePoly direct = uniform_sum_spline({Rat(1), Rat(2)}, Rat(0));
    CHECK(via_conv.integrate_total() == 1);
    for (const Rat& x : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(5, 2)})
        CHECK(via_conv.eval(x, 1) == direct.eval(x, 1));

    PiecewisePoly img = uniform_sum_spline({Rat(1)}, Rat(0)).affine_image(Rat(-3), Rat(1));
    CHECK(img.support_lo() == Rat(-2));
    CHECK(img.support_hi() == Rat(1));
    CHECK(img.integrate_total() == 1);
    CHECK(img.eval(Rat(0)) == Rat(1, 3));
}

TEST_CASE("one-sided evaluation at breakpoints") {
    PiecewisePoly s1 = uniform_sum_spline({Rat(1)}, Rat(0));
    CHECK(s1.eval(Rat(0), 1) == 1);
    CHECK(s1.eval(Rat(0), -1) == 0);
    CHECK_THROWS_AS(s1.eval(Rat(0), 0), std::domain_error);
}

TEST_CASE("fourier transform") {
    PiecewisePoly s2 = uniform_sum_spline({Rat(1), Rat(1)}, Rat(-1)); // centered triangle
    CHECK(std::abs(s2.fourier(0.0) - Cplx(1.0, 0.0)) < 1e-15);
    // characteristic function of the centered triangle: sinc(pi tau)^2
    for (double tau : {0.1, 0.5, 1.3, 3.7, 10.2}) {
        double expect = std::pow(std::sin(M_PI * tau) / (M_PI * tau), 2);
        CHECK(std::abs(s2.fourier(tau) - Cplx(expect, 0.0)) < 1e-12);
    }
    // off-center support picks up a phase but keeps the modulus
    PiecewisePoly s2s = uniform_sum_spline({Rat(1), Rat(1)}, Rat(0));
    for (double tau : {0.25, 2.5}) CHECK(std::abs(std::abs(s2s.fourier(tau)) - std::abs(s2.fourier(tau))) < 1e-12);
}

TEST_CASE("beta densities") {
    PiecewisePoly b22 = beta_density(2, 2);
    CHECK(b22.integrate_total() == 1);
    CHECK(b22.eval(Rat(1, 2)) == Rat(3, 2));
    PiecewisePoly b11 = beta_density(1, 1);
    CHECK(b11.eval(Rat(1, 3)) == 1);
    CHECK_THROWS_AS(beta_density(0, 1), std::invalid_argument);
}
