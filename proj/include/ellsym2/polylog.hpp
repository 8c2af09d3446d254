// polylog.hpp
//
// Classical polylogarithms Li_1, Li_2, Li_3 on the closed unit disk, the
// single-valued functions L2 (Bloch-Wigner) and L3, and the elementary
// weights J, J3, B3.
//
//   L3(z) = Re(Li3(z) - log|z| Li2(z) + (1/3) log^2|z| Li1(z)),  L3(1/z) = L3(z)
//   L2(z) = Im(Li2(z) + log|z| log(1-z)),                        L2(1/z) = -L2(z)
//   J(z)  = log|z| log|1-z|,   J3(z) = log^2|z| log|1-z|,  both 0 when log|z| = 0
//   B3(X) = X^3 - 3X^2/2 + X/2

#pragma once

#include "ellsym2/constants.hpp"
#include "ellsym2/precision.hpp"

namespace ellsym2::polylog {

// Li_m(z) for m in {1,2,3} and |z| <= 1 (+ tolerance).  Interior |z| < 0.9
// by the direct series, the band 0.9 <= |z| <= 1 by the log-series with
// Bernoulli-number coefficients, exact closed forms at z in {1,-1,i,-i}.
Complex li(int m, const Complex& z, const PrecisionContext& ctx);

Real sv_trilog(const Complex& z, const PrecisionContext& ctx);
Real bloch_wigner(const Complex& z, const PrecisionContext& ctx);

Real j_weight(const Complex& z, const PrecisionContext& ctx);
Real j3_weight(const Complex& z, const PrecisionContext& ctx);

Real bernoulli_b3(const Real& x);

namespace detail {

// direct defining series; requires |z| < 1
Complex li_direct_series(int m, const Complex& z, const PrecisionContext& ctx);

// expansion in mu = log z, valid for |mu| < 2 pi (covers the band and the
// unit circle); m in {2,3}
Complex li_log_series(int m, const Complex& z, const PrecisionContext& ctx);

// J and J3 with the log|z| factor supplied by the caller (the q-series code
// knows it exactly)
Real j_from_logz(const Real& logz, const Complex& z);
Real j3_from_logz(const Real& logz, const Complex& z);

} // namespace detail

} // namespace ellsym2::polylog
