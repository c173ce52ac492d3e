#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace cuelab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(const BigInt& n, long k) {
    if (k < 0) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - (i - 1));
        r /= i;
    }
    return r;
}

/// Rising factorial a(a+1)...(a+n-1).
inline Rat rising(const Rat& a, long n) {
    Rat r = 1;
    for (long i = 0; i < n; ++i) r *= (a + i);
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("pow_rat: 0^negative");
        return 1 / pow_rat(b, -e);
    }
    Rat r = 1, x = b;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

inline double to_double(const Rat& r) { return static_cast<double>(r); }

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace cuelab
