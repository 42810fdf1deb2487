#ifndef CFRAC_RATIONAL_HPP
#define CFRAC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <string_view>

#include "cfrac/errors.hpp"

namespace cfrac {

// Exact rationals are GMP's mpq_class, which keeps values reduced with a
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer odd_double_factorial(unsigned long n) {
    // (2n-1)!! with the empty-product convention (-1)!! = 1
    Integer r(1);
    for (unsigned long j = 1; j <= n; ++j) r *= 2 * j - 1;
    return r;
}

inline size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

// Canonical text form: "p/q" with q > 1, plain "p" otherwise.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(std::string_view s);

} // namespace cfrac

#endif
