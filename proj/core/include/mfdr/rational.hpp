#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mfdr {

using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational frac(const Integer& p, const Integer& q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts "p", "p/q", optional sign; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);
Integer factorial(long n);

// True when the denominator of x is a product of 2s and 3s.
bool denominator_is_6_smooth(const Rational& x);

} // namespace mfdr
