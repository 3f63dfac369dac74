#pragma once

// Exact rational scalars. GMP's mpq_class already maintains the canonical
// form we rely on everywhere (lowest terms, positive denominator), so the
// core just fixes a few construction and formatting conventions on top.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kt {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_frac(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d", optionally signed.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace kt
