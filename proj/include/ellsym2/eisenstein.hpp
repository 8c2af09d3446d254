// eisenstein.hpp
//
// Eisenstein-Kronecker series
//
//   K_{a,b}(tau; u) = sum' e^{2 pi i (n xi - m eta)} / ((m tau + n)^a (m tau~ + n)^b)
//
// over expanding squares (the primed sum excludes (0,0)), the regulator
// R^E(e^{2 pi i u}) = Im(tau)^2/pi K_{2,1}(tau; u), and the determinant
// relation between the K-matrix and the L3-matrix on degree-zero divisors:
//
//   det[L31(xi_i), L32(xi_i)] = -(2 Im(tau)^6 / pi^2) det[Re K_{1,3}(xi_i), K_{2,2}(xi_i)]
//
// a+b >= 4 sums converge absolutely and carry a certified tail bound;
// a+b = 3 is conditionally convergent and is summed by symmetric squares
// (Eisenstein summation) with an empirical Cauchy-difference error estimate.

#pragma once

#include <vector>

#include "ellsym2/elliptic.hpp"
#include "ellsym2/precision.hpp"
#include "ellsym2/report.hpp"

namespace ellsym2::ek {

struct EKSeriesSpec {
    int a = 2;
    int b = 2;
    Complex tau;
    ell::TorsionPoint point = ell::pt_O();
    long radius = 1000;

    void validate() const;
    bool conditionally_convergent() const { return a + b == 3; }
};

struct KValue {
    Complex value;
    Real err_est;     // certified tail for a+b >= 4, Cauchy difference for a+b = 3
    bool conditional; // true when a+b = 3
};

KValue k_ab(const EKSeriesSpec& spec, const PrecisionContext& ctx, int threads = 0);

// R^E = Im(tau)^2/pi * K_{2,1}(tau; u); Re(R^E) = D^E, Im(R^E) = J^E
Complex r_e(const ell::CurveContext& cc, const ell::TorsionPoint& pt, long radius,
            const PrecisionContext& ctx, int threads = 0);

// divisor-level K (per-point evaluations summed with multiplicities)
KValue k_ab_divisor(int a, int b, const Complex& tau, const ell::Divisor& div, long radius,
                    const PrecisionContext& ctx, int threads = 0);

// Ratio of the two determinants for degree-zero divisors, reported against 1.
VerificationReport k_det_relation_check(const ell::CurveContext& cc, const ell::Divisor& div1,
                                        const ell::Divisor& div2, long radius,
                                        const PrecisionContext& ctx, int threads = 0);

} // namespace ellsym2::ek
