// constants.hpp
//
// Mathematical constants and classical series shared by every module:
// pi, log 2, Euler's gamma, zeta(m), Hurwitz zeta(m, a), the Dirichlet
// beta function, exact Bernoulli numbers and factorials.  Everything is
// computed once per working precision and cached immutably.

#pragma once

#include "ellsym2/precision.hpp"
#include "ellsym2/rational.hpp"

namespace ellsym2 {

Real const_pi(const PrecisionContext& ctx);
Real const_log2(const PrecisionContext& ctx);
Real const_euler(const PrecisionContext& ctx);

// zeta(m) for integer m >= 2.  Even m use the Bernoulli closed form,
// odd m the Euler-Maclaurin corrected direct series.
Real zeta_int(int m, const PrecisionContext& ctx);

// Hurwitz zeta(m, a) for integer m >= 2 and a in (0, 1], Euler-Maclaurin.
Real hurwitz_zeta_int(int m, const Real& a, const PrecisionContext& ctx);

// beta(m) = sum_{k>=0} (-1)^k / (2k+1)^m for m >= 1, via accelerated
// alternating series.
Real dirichlet_beta(int m, const PrecisionContext& ctx);

// Independent route for the same value: beta(m) = 4^-m (zeta(m,1/4) - zeta(m,3/4)).
// Used by tests; valid for m >= 2.
Real dirichlet_beta_hurwitz(int m, const PrecisionContext& ctx);

// Exact Bernoulli number B_n (B_1 = -1/2 convention).
const Rational& bernoulli(int n);

// n! as an exact integer.
const mpz_class& factorial_int(unsigned n);

} // namespace ellsym2
