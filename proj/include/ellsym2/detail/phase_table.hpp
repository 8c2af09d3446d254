// detail/phase_table.hpp
//
// Shared machinery of the double-precision lattice kernels: exact rational
// phase tables for e^{2 pi i (n xi - m eta)} and the least eigenvalue of the
// quadratic form |m tau + n|^2.  Tables are mirrored so that negating (m, n)
// conjugates the phase bit-exactly.

#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "ellsym2/elliptic.hpp"

namespace ellsym2::detail {

struct PhaseTable {
    long den = 1;
    long a = 0; // xi  = a/den
    long b = 0; // eta = b/den
    std::vector<double> c, s;

    static PhaseTable build(const ell::TorsionPoint& pt) {
        PhaseTable t;
        long dx = den_long(pt.xi), de = den_long(pt.eta);
        t.den = std::lcm(dx, de);
        t.a = num_long(pt.xi) * (t.den / dx);
        t.b = num_long(pt.eta) * (t.den / de);
        t.c.assign(t.den, 0.0);
        t.s.assign(t.den, 0.0);
        for (long j = 0; j <= t.den / 2; ++j) {
            double cj, sj;
            if (4 * j % t.den == 0) {
                switch (4 * j / t.den) { // exact 4th roots of unity
                    case 0: cj = 1.0; sj = 0.0; break;
                    case 1: cj = 0.0; sj = 1.0; break;
                    default: cj = -1.0; sj = 0.0; break; // j = den/2
                }
            } else {
                double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(t.den);
                cj = std::cos(ang);
                sj = std::sin(ang);
            }
            t.c[j] = cj;
            t.s[j] = sj;
            if (j != 0 && 2 * j != t.den) { // mirror: exact conjugation
                t.c[t.den - j] = cj;
                t.s[t.den - j] = -sj;
            }
        }
        return t;
    }

    long index(long m, long n) const {
        long r = (n * a - m * b) % den;
        return r < 0 ? r + den : r;
    }
};

// least eigenvalue of |m tau + n|^2 = m^2 |tau|^2 + 2 m n Re(tau) + n^2
inline Real lattice_lambda_min(const Complex& tau) {
    Real t2 = tau.norm();
    Real d = sqr(t2 - 1) + 4 * sqr(tau.real());
    return ((1 + t2) - sqrt(d)) / 2;
}

} // namespace ellsym2::detail
