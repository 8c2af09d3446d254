// elliptic.hpp
//
// The elliptic trilogarithm pair L31, L32 and the weight-2 functions D^E,
// J^E on C*/q^Z, in both q-series form
//
//   L31(x) = sum_{n in Z} L3(q^n x)
//   L32(x) = sum_{n>=0} J3(q^n x) + sum_{n>=1} J3(q^n x^-1)
//            + log^2|x| log^2|q x^-1| / (4 log|q|)
//   D^E(x) = sum_{n in Z} L2(q^n x)
//   J^E(x) = sum_{n>=0} J(q^n x) - sum_{n>=1} J(q^n x^-1)
//            + (1/3) log^2|q| B3(log|x|/log|q|)
//
// and Eisenstein-series (lattice) form
//
//   L31(x) = (4 Im(tau)^5 / 3 pi) Re sum' e^{2 pi i(n xi - m eta)} m^2/|m tau + n|^6
//   L32(x) = (Im(tau)^3 / pi) [ sum' e^{...}/|m tau+n|^4
//            + 2 Re sum' e^{...} (m tau+n)^2/|m tau+n|^6 ] + log^3|q|/120,
//
// extended linearly to divisors.  Points are u = xi tau + eta with
// (xi, eta) in R/Z, x = e^{2 pi i u}.

#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ellsym2/precision.hpp"
#include "ellsym2/rational.hpp"

namespace ellsym2::ell {

// A torsion point stored as an exact rational pair (xi, eta), reduced mod 1.
struct TorsionPoint {
    Rational xi;
    Rational eta;

    TorsionPoint(Rational x, Rational e);
    static TorsionPoint of(long xn, long xd, long en, long ed);

    TorsionPoint negated() const { return TorsionPoint(-xi, -eta); }
    TorsionPoint times(long k) const { return TorsionPoint(xi * k, eta * k); }
    TorsionPoint plus(const TorsionPoint& o) const { return TorsionPoint(xi + o.xi, eta + o.eta); }

    bool operator==(const TorsionPoint& o) const { return xi == o.xi && eta == o.eta; }
};

// Formal integer combination of torsion points.
struct Divisor {
    std::vector<std::pair<long, TorsionPoint>> terms;

    Divisor() = default;
    Divisor(std::initializer_list<std::pair<long, TorsionPoint>> t);

    void normalize(); // merge duplicate points, drop zero multiplicities
    long degree() const;
    Divisor scaled(long k) const;
};

// Non-torsion points carry real coordinates (the L-functions accept them).
struct RealPoint {
    Real xi;
    Real eta;
};
struct RealDivisor {
    std::vector<std::pair<long, RealPoint>> terms;
    long degree() const;
};

// tau in the upper half plane; q = e^{2 pi i tau}.
struct CurveContext {
    Complex tau;
    Complex q;
    Real im_tau;
    Real log_abs_q; // = -2 pi Im(tau)

    static CurveContext make(const Complex& tau, const PrecisionContext& ctx);
    static CurveContext square_lattice(const PrecisionContext& ctx); // tau = i
};

// --- q-series route ------------------------------------------------------

Real l31_qseries(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx);
Real l32_qseries(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx);
Real d_e(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx);
Real j_e(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx);

// real-coordinate core (used by the curve module for non-torsion points)
Real l31_point(const CurveContext& cc, const Real& xi, const Real& eta, const PrecisionContext& ctx);
Real l32_point(const CurveContext& cc, const Real& xi, const Real& eta, const PrecisionContext& ctx);
Real de_point(const CurveContext& cc, const Real& xi, const Real& eta, const PrecisionContext& ctx);
Real je_point(const CurveContext& cc, const Real& xi, const Real& eta, const PrecisionContext& ctx);

// --- lattice route -------------------------------------------------------

struct LatticeValue {
    Real value;
    Real tail_bound;
};

LatticeValue l31_lattice(const CurveContext& cc, const TorsionPoint& pt, long radius,
                         const PrecisionContext& ctx, int threads = 0);
LatticeValue l32_lattice(const CurveContext& cc, const TorsionPoint& pt, long radius,
                         const PrecisionContext& ctx, int threads = 0);

// --- divisors ------------------------------------------------------------

enum class EllFunc { L31, L32, DE, JE };

Real eval_divisor(const CurveContext& cc, EllFunc fn, const Divisor& div,
                  const PrecisionContext& ctx);
Real eval_divisor(const CurveContext& cc, EllFunc fn, const RealDivisor& div,
                  const PrecisionContext& ctx);
LatticeValue eval_divisor_lattice(const CurveContext& cc, EllFunc fn, const Divisor& div,
                                  long radius, const PrecisionContext& ctx, int threads = 0);

// L31(d1) L32(d2) - L31(d2) L32(d1), q-series route
Real reg3_det(const CurveContext& cc, const Divisor& d1, const Divisor& d2,
              const PrecisionContext& ctx);
Real reg3_det(const CurveContext& cc, const RealDivisor& d1, const RealDivisor& d2,
              const PrecisionContext& ctx);

// The canonical points of the square-lattice curve: O, P, Q, P+Q, 2Q, P+2Q.
TorsionPoint pt_O();
TorsionPoint pt_P();      // (1/2, 0),  u = tau/2
TorsionPoint pt_Q();      // (0, 1/4),  u = 1/4
TorsionPoint pt_PQ();     // (1/2, 1/4)
TorsionPoint pt_2Q();     // (0, 1/2)
TorsionPoint pt_P2Q();    // (1/2, 1/2)

// xi_1 = (Q) + (P+Q) - 2(O), xi_2 = (2Q) - (P)
Divisor divisor_xi1();
Divisor divisor_xi2();

} // namespace ellsym2::ell
