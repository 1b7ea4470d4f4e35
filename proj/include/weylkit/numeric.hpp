#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace weylkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// x (x-1) ... (x-k+1)
inline Integer falling(const Integer& x, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x - i;
    return r;
}

inline Integer rising(const Integer& x, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x + i;
    return r;
}

// a / b in lowest terms
inline Rational ratio(const Integer& a, const Integer& b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// generalized binomial with rational top
inline Rational rational_binomial(const Rational& top, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= top - i;
        r /= i + 1;
    }
    r.canonicalize();
    return r;
}

inline Rational rpow(const Rational& x, unsigned long e) {
    Rational r = 1;
    Rational base = x;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Integer ipow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace weylkit
