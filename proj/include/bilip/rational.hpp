#pragma once

#include <gmpxx.h>

#include <string>

namespace bilip {

// Exact rational coefficients.  mpq_class arithmetic keeps values canonical,
// but the (num, den) constructor does not reduce -- use make_rational for
// that, or equality comparisons silently break.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

// Prints "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

}  // namespace bilip
