#pragma once

#include <gmpxx.h>

#include <string>

namespace qcert {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(num, den) does not canonicalize; every fraction construction goes
// through here.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

Integer factorial(long m);

// C(m, r) with the empty-sum convention: 0 whenever r < 0 or r > m (so also for m < 0).
Rational binomial(long m, long r);

Integer pow_integer(long base, unsigned long exp);

std::string to_string(const Rational& r);

// Fixed-precision decimal rendering, reporting only.
std::string decimal_string(const Rational& r, int digits = 12);

}  // namespace qcert
