// rational.hpp — exact rational arithmetic (gmpxx) helpers.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "ellsym2/precision.hpp"

namespace ellsym2 {

using Rational = mpq_class;

inline Rational rational(long p, long q = 1) {
    if (q == 0) throw std::domain_error("rational: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// parse "p/q" or "p"
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational \"" + s + "\"");
    }
}

// reduce into [0, 1)
inline Rational mod_one(const Rational& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

inline Real to_real(const Rational& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), x.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline long den_long(const Rational& x) {
    if (!x.get_den().fits_slong_p())
        throw std::domain_error("rational denominator out of range");
    return x.get_den().get_si();
}

inline long num_long(const Rational& x) {
    if (!x.get_num().fits_slong_p())
        throw std::domain_error("rational numerator out of range");
    return x.get_num().get_si();
}

} // namespace ellsym2
