// elliptic.cpp

#include "ellsym2/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ellsym2/constants.hpp"
#include "ellsym2/detail/phase_table.hpp"
#include "ellsym2/polylog.hpp"
#include "ellsym2/summation.hpp"

namespace ellsym2::ell {

namespace {
constexpr long kMaxDen = 1000000;
}

TorsionPoint::TorsionPoint(Rational x, Rational e) : xi(mod_one(x)), eta(mod_one(e)) {
    if (den_long(xi) > kMaxDen || den_long(eta) > kMaxDen)
        throw std::domain_error("TorsionPoint: denominator exceeds 10^6");
}

TorsionPoint TorsionPoint::of(long xn, long xd, long en, long ed) {
    return TorsionPoint(rational(xn, xd), rational(en, ed));
}

Divisor::Divisor(std::initializer_list<std::pair<long, TorsionPoint>> t) : terms(t) {
    normalize();
}

void Divisor::normalize() {
    std::vector<std::pair<long, TorsionPoint>> merged;
    for (const auto& [mult, pt] : terms) {
        bool found = false;
        for (auto& [m2, p2] : merged) {
            if (p2 == pt) {
                m2 += mult;
                found = true;
                break;
            }
        }
        if (!found) merged.emplace_back(mult, pt);
    }
    std::erase_if(merged, [](const auto& t) { return t.first == 0; });
    terms = std::move(merged);
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [mult, pt] : terms) d += mult;
    return d;
}

Divisor Divisor::scaled(long k) const {
    Divisor d = *this;
    for (auto& [mult, pt] : d.terms) mult *= k;
    d.normalize();
    return d;
}

long RealDivisor::degree() const {
    long d = 0;
    for (const auto& [mult, pt] : terms) d += mult;
    return d;
}

CurveContext CurveContext::make(const Complex& tau, const PrecisionContext& ctx) {
    if (!(tau.imag() > 0))
        throw std::domain_error("CurveContext: Im(tau) must be positive");
    CurveContext cc;
    Real twopi = 2 * const_pi(ctx);
    cc.tau = tau;
    cc.im_tau = tau.imag();
    cc.log_abs_q = -twopi * tau.imag();
    cc.q = cexp(Complex{cc.log_abs_q, twopi * tau.real()});
    return cc;
}

CurveContext CurveContext::square_lattice(const PrecisionContext& ctx) {
    return make(Complex{ctx.real(0L), ctx.real(1L)}, ctx);
}

// ---------------------------------------------------------------- q-series

namespace {

struct PointX {
    Complex x;
    Real log_abs_x; // = xi log|q|, exact in xi
    Real xi;        // reduced to [0,1)
};

// x = e^{2 pi i (xi tau + eta)}; for rectangular tau and eta = k/4 the
// angular factor is a 4th root of unity, taken from a table so the q-series
// sees exact zeros where the identities need them.
PointX make_x(const CurveContext& cc, const Real& xi_red, const Real& eta_red,
              const PrecisionContext& ctx, long eta_num4) {
    const mpfr_prec_t prec = ctx.prec_bits();
    Real lx = xi_red * cc.log_abs_q;
    Real r = exp(lx);
    if (cc.tau.real().is_zero() && eta_num4 >= 0) {
        switch (eta_num4 & 3) {
            case 0: return {Complex{r, Real(prec)}, lx, xi_red};
            case 1: return {Complex{Real(prec), r}, lx, xi_red};
            case 2: return {Complex{-r, Real(prec)}, lx, xi_red};
            default: return {Complex{Real(prec), -r}, lx, xi_red};
        }
    }
    Real ang = frac(xi_red * cc.tau.real() + eta_red);
    Real theta = 2 * const_pi(ctx) * ang;
    Real s(prec), c(prec);
    sin_cos(s, c, theta);
    return {Complex{r * c, r * s}, lx, xi_red};
}

PointX make_x(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    long ed = den_long(pt.eta);
    long eta_num4 = (4 % ed == 0) ? num_long(pt.eta) * (4 / ed) : -1;
    return make_x(cc, to_real(pt.xi, prec), to_real(pt.eta, prec), ctx, eta_num4);
}

PointX make_x(const CurveContext& cc, const Real& xi, const Real& eta,
              const PrecisionContext& ctx) {
    return make_x(cc, frac(xi), frac(eta), ctx, -1);
}

constexpr int kMaxOrbitTerms = 100000;

// |L3(z)| <= r/(1-r) (1 + L + L^2/3) with r = e^{-|log|z||}
Real l3_bound(const Real& la) {
    Real al = abs(la);
    Real r = exp(-al);
    return r / (1 - r) * (1 + al + sqr(al) / 3);
}

// |L2(z)| <= r/(1-r) (1 + L)
Real l2_bound(const Real& la) {
    Real al = abs(la);
    Real r = exp(-al);
    return r / (1 - r) * (1 + al);
}

// |J3(z)| <= L^2 r/(1-r), |J(z)| <= L r/(1-r), valid for |z| = e^{lz} < 1
Real j3_term_bound(const Real& lz) {
    Real r = exp(lz);
    return sqr(lz) * r / (1 - r);
}
Real j_term_bound(const Real& lz) {
    Real r = exp(lz);
    return abs(lz) * r / (1 - r);
}

Real l31_core(const CurveContext& cc, const PointX& px, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() / 8;
    KahanR acc(prec);
    acc.add(polylog::sv_trilog(px.x, ctx));
    // n >= 1: arguments q^n x, |.| shrinking geometrically
    Complex z = px.x;
    Real la = px.log_abs_x;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        la += cc.log_abs_q;
        if (l3_bound(la) < eps) break;
        z = z * cc.q;
        acc.add(polylog::sv_trilog(z, ctx));
    }
    // n <= -1: |q^n x| > 1, handled by the inversion convention inside L3
    z = px.x;
    la = px.log_abs_x;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        la -= cc.log_abs_q;
        if (l3_bound(la) < eps) break;
        z = z / cc.q;
        acc.add(polylog::sv_trilog(z, ctx));
    }
    return acc.value();
}

Real l32_core(const CurveContext& cc, const PointX& px, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() / 8;
    const Real& lq = cc.log_abs_q;
    const Real& lx = px.log_abs_x;
    KahanR acc(prec);
    // sum_{n>=0} J3(q^n x); the n = 0 factor log^2|x| may vanish (J3 := 0)
    acc.add(polylog::detail::j3_from_logz(lx, px.x));
    Complex z = px.x;
    Real lz = lx;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        lz += lq;
        if (j3_term_bound(lz) < eps) break;
        z = z * cc.q;
        acc.add(polylog::detail::j3_from_logz(lz, z));
    }
    // sum_{n>=1} J3(q^n x^-1)
    z = cinv(px.x);
    lz = -lx;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        lz += lq;
        if (j3_term_bound(lz) < eps) break;
        z = z * cc.q;
        acc.add(polylog::detail::j3_from_logz(lz, z));
    }
    // log^2|x| log^2|q x^-1| / (4 log|q|)
    acc.add(sqr(lx) * sqr(lq - lx) / (4 * lq));
    return acc.value();
}

Real de_core(const CurveContext& cc, const PointX& px, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() / 8;
    KahanR acc(prec);
    acc.add(polylog::bloch_wigner(px.x, ctx));
    Complex z = px.x;
    Real la = px.log_abs_x;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        la += cc.log_abs_q;
        if (l2_bound(la) < eps) break;
        z = z * cc.q;
        acc.add(polylog::bloch_wigner(z, ctx));
    }
    z = px.x;
    la = px.log_abs_x;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        la -= cc.log_abs_q;
        if (l2_bound(la) < eps) break;
        z = z / cc.q;
        acc.add(polylog::bloch_wigner(z, ctx));
    }
    return acc.value();
}

Real je_core(const CurveContext& cc, const PointX& px, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() / 8;
    const Real& lq = cc.log_abs_q;
    const Real& lx = px.log_abs_x;
    KahanR acc(prec);
    acc.add(polylog::detail::j_from_logz(lx, px.x));
    Complex z = px.x;
    Real lz = lx;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        lz += lq;
        if (j_term_bound(lz) < eps) break;
        z = z * cc.q;
        acc.add(polylog::detail::j_from_logz(lz, z));
    }
    // minus the second sum
    z = cinv(px.x);
    lz = -lx;
    for (int n = 1; n <= kMaxOrbitTerms; ++n) {
        lz += lq;
        if (j_term_bound(lz) < eps) break;
        z = z * cc.q;
        acc.add(-polylog::detail::j_from_logz(lz, z));
    }
    // (1/3) log^2|q| B3(xi), with xi = log|x|/log|q|
    acc.add(sqr(lq) / 3 * polylog::bernoulli_b3(px.xi));
    return acc.value();
}

Real core_dispatch(const CurveContext& cc, EllFunc fn, const PointX& px,
                   const PrecisionContext& ctx) {
    switch (fn) {
        case EllFunc::L31: return l31_core(cc, px, ctx);
        case EllFunc::L32: return l32_core(cc, px, ctx);
        case EllFunc::DE: return de_core(cc, px, ctx);
        case EllFunc::JE: return je_core(cc, px, ctx);
    }
    throw std::logic_error("core_dispatch: bad function");
}

} // namespace

Real l31_qseries(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx) {
    return l31_core(cc, make_x(cc, pt, ctx), ctx);
}
Real l32_qseries(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx) {
    return l32_core(cc, make_x(cc, pt, ctx), ctx);
}
Real d_e(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx) {
    return de_core(cc, make_x(cc, pt, ctx), ctx);
}
Real j_e(const CurveContext& cc, const TorsionPoint& pt, const PrecisionContext& ctx) {
    return je_core(cc, make_x(cc, pt, ctx), ctx);
}

Real l31_point(const CurveContext& cc, const Real& xi, const Real& eta,
               const PrecisionContext& ctx) {
    return l31_core(cc, make_x(cc, xi, eta, ctx), ctx);
}
Real l32_point(const CurveContext& cc, const Real& xi, const Real& eta,
               const PrecisionContext& ctx) {
    return l32_core(cc, make_x(cc, xi, eta, ctx), ctx);
}
Real de_point(const CurveContext& cc, const Real& xi, const Real& eta,
              const PrecisionContext& ctx) {
    return de_core(cc, make_x(cc, xi, eta, ctx), ctx);
}
Real je_point(const CurveContext& cc, const Real& xi, const Real& eta,
              const PrecisionContext& ctx) {
    return je_core(cc, make_x(cc, xi, eta, ctx), ctx);
}

// ---------------------------------------------------------------- lattice

namespace {

using detail::PhaseTable;
using detail::lattice_lambda_min;

struct ShellSums {
    double s1 = 0, c1 = 0; // first accumulator (value, compensation)
    double s2 = 0, c2 = 0; // second accumulator where needed
};

// Accumulates f(m, n) over shells 1..R deterministically, two channels.
template <class F>
std::pair<Real, Real> shell_sum2(long R, const PrecisionContext& ctx, int threads, F&& fpoint) {
    std::vector<ShellSums> shells(static_cast<std::size_t>(R) + 1);
    parallel_for(1, R + 1, [&](std::int64_t k) {
        KahanD a1, a2;
        auto add_group = [&](std::initializer_list<std::pair<long, long>> pts) {
            double g1 = 0, g2 = 0;
            for (auto [m, n] : pts) {
                double h1 = 0, h2 = 0;
                fpoint(m, n, h1, h2);
                g1 += h1;
                g2 += h2;
            }
            a1.add(g1);
            a2.add(g2);
        };
        for (long t = 0; t < k; ++t) add_group({{k, t}, {t, k}, {-k, -t}, {-t, -k}});
        for (long t = 1; t < k; ++t) add_group({{k, -t}, {-t, k}, {-k, t}, {t, -k}});
        add_group({{k, k}, {-k, -k}});
        add_group({{k, -k}, {-k, k}});
        shells[static_cast<std::size_t>(k)] = {a1.sum, a1.comp, a2.sum, a2.comp};
    }, threads);
    const mpfr_prec_t prec = ctx.prec_bits();
    KahanR t1(prec), t2(prec);
    for (long k = 1; k <= R; ++k) {
        const auto& sh = shells[static_cast<std::size_t>(k)];
        t1.add(Real::of(sh.s1, prec));
        t1.add(Real::of(sh.c1, prec));
        t2.add(Real::of(sh.s2, prec));
        t2.add(Real::of(sh.c2, prec));
    }
    return {t1.value(), t2.value()};
}

} // namespace

LatticeValue l31_lattice(const CurveContext& cc, const TorsionPoint& pt, long radius,
                         const PrecisionContext& ctx, int threads) {
    if (radius < 10) throw std::domain_error("l31_lattice: radius must be >= 10");
    PhaseTable ph = PhaseTable::build(pt);
    const double sg = cc.tau.real().to_double();
    const double t = cc.tau.imag().to_double();

    auto fpoint = [&](long m, long n, double& g1, double& g2) {
        (void)g2;
        double A = static_cast<double>(m) * sg + static_cast<double>(n);
        double B = static_cast<double>(m) * t;
        double Q = A * A + B * B;
        double inv = 1.0 / Q;
        double p3 = inv * inv * inv;
        g1 = ph.c[ph.index(m, n)] * static_cast<double>(m) * static_cast<double>(m) * p3;
    };
    auto [S, unused] = shell_sum2(radius, ctx, threads, fpoint);
    (void)unused;

    Real pref = 4 * pow_si(cc.im_tau, 5) / (3 * const_pi(ctx));
    Real lam = lattice_lambda_min(cc.tau);
    Real R = ctx.real(radius);
    // terms m^2/Q^3 <= lambda^-3 k^-4 on shell k
    Real tail = pref * 4 / (pow_si(lam, 3) * sqr(R));
    return {pref * S, tail};
}

LatticeValue l32_lattice(const CurveContext& cc, const TorsionPoint& pt, long radius,
                         const PrecisionContext& ctx, int threads) {
    if (radius < 10) throw std::domain_error("l32_lattice: radius must be >= 10");
    PhaseTable ph = PhaseTable::build(pt);
    const double sg = cc.tau.real().to_double();
    const double t = cc.tau.imag().to_double();

    // channel 1: Re sum' phase/Q^2; channel 2: Re sum' phase (m tau + n)^2/Q^3
    auto fpoint = [&](long m, long n, double& g1, double& g2) {
        double A = static_cast<double>(m) * sg + static_cast<double>(n);
        double B = static_cast<double>(m) * t;
        double Q = A * A + B * B;
        double inv = 1.0 / Q;
        double p2 = inv * inv;
        long idx = ph.index(m, n);
        double cph = ph.c[idx], sph = ph.s[idx];
        g1 = cph * p2;
        // (m tau + n)^2 = A^2 - B^2 + 2ABi
        g2 = (cph * (A * A - B * B) - sph * (2.0 * A * B)) * (p2 * inv);
    };
    auto [S1, S2] = shell_sum2(radius, ctx, threads, fpoint);

    Real pref = pow_si(cc.im_tau, 3) / const_pi(ctx);
    Real value = pref * (S1 + 2 * S2) + pow_si(cc.log_abs_q, 3) / 120;
    Real lam = lattice_lambda_min(cc.tau);
    Real R = ctx.real(radius);
    // both integrands bounded by lambda^-2 k^-4 on shell k
    Real tail = pref * (4 + 8) / (sqr(lam) * sqr(R));
    return {value, tail};
}

// ---------------------------------------------------------------- divisors

Real eval_divisor(const CurveContext& cc, EllFunc fn, const Divisor& div,
                  const PrecisionContext& ctx) {
    KahanR acc(ctx.prec_bits());
    for (const auto& [mult, pt] : div.terms) {
        acc.add(core_dispatch(cc, fn, make_x(cc, pt, ctx), ctx) * mult);
    }
    return acc.value();
}

Real eval_divisor(const CurveContext& cc, EllFunc fn, const RealDivisor& div,
                  const PrecisionContext& ctx) {
    KahanR acc(ctx.prec_bits());
    for (const auto& [mult, pt] : div.terms) {
        acc.add(core_dispatch(cc, fn, make_x(cc, pt.xi, pt.eta, ctx), ctx) * mult);
    }
    return acc.value();
}

LatticeValue eval_divisor_lattice(const CurveContext& cc, EllFunc fn, const Divisor& div,
                                  long radius, const PrecisionContext& ctx, int threads) {
    if (fn != EllFunc::L31 && fn != EllFunc::L32)
        throw std::domain_error("eval_divisor_lattice: only L31/L32 have lattice forms");
    Real value(ctx.prec_bits());
    Real tail(ctx.prec_bits());
    for (const auto& [mult, pt] : div.terms) {
        LatticeValue lv = (fn == EllFunc::L31) ? l31_lattice(cc, pt, radius, ctx, threads)
                                               : l32_lattice(cc, pt, radius, ctx, threads);
        value += lv.value * mult;
        tail += lv.tail_bound * std::labs(mult);
    }
    return {value, tail};
}

Real reg3_det(const CurveContext& cc, const Divisor& d1, const Divisor& d2,
              const PrecisionContext& ctx) {
    Real a = eval_divisor(cc, EllFunc::L31, d1, ctx);
    Real b = eval_divisor(cc, EllFunc::L32, d1, ctx);
    Real c = eval_divisor(cc, EllFunc::L31, d2, ctx);
    Real d = eval_divisor(cc, EllFunc::L32, d2, ctx);
    return a * d - c * b;
}

Real reg3_det(const CurveContext& cc, const RealDivisor& d1, const RealDivisor& d2,
              const PrecisionContext& ctx) {
    Real a = eval_divisor(cc, EllFunc::L31, d1, ctx);
    Real b = eval_divisor(cc, EllFunc::L32, d1, ctx);
    Real c = eval_divisor(cc, EllFunc::L31, d2, ctx);
    Real d = eval_divisor(cc, EllFunc::L32, d2, ctx);
    return a * d - c * b;
}

// ------------------------------------------------------- canonical points

TorsionPoint pt_O() { return TorsionPoint::of(0, 1, 0, 1); }
TorsionPoint pt_P() { return TorsionPoint::of(1, 2, 0, 1); }
TorsionPoint pt_Q() { return TorsionPoint::of(0, 1, 1, 4); }
TorsionPoint pt_PQ() { return TorsionPoint::of(1, 2, 1, 4); }
TorsionPoint pt_2Q() { return TorsionPoint::of(0, 1, 1, 2); }
TorsionPoint pt_P2Q() { return TorsionPoint::of(1, 2, 1, 2); }

Divisor divisor_xi1() {
    return Divisor{{1, pt_Q()}, {1, pt_PQ()}, {-2, pt_O()}};
}
Divisor divisor_xi2() {
    return Divisor{{1, pt_2Q()}, {-1, pt_P()}};
}

} // namespace ellsym2::ell
