// eisenstein.cpp

#include "ellsym2/eisenstein.hpp"

#include <chrono>
#include <cmath>

#include "ellsym2/constants.hpp"
#include "ellsym2/detail/phase_table.hpp"
#include "ellsym2/summation.hpp"

namespace ellsym2::ek {

namespace {

using detail::PhaseTable;
using detail::lattice_lambda_min;

struct ShellC {
    double re = 0, re_c = 0;
    double im = 0, im_c = 0;
};

// z^k for complex double (a, b exponents are tiny)
inline void cpow(double re, double im, int k, double& outre, double& outim) {
    double ar = 1.0, ai = 0.0;
    for (int i = 0; i < k; ++i) {
        double nr = ar * re - ai * im;
        double ni = ar * im + ai * re;
        ar = nr;
        ai = ni;
    }
    outre = ar;
    outim = ai;
}

} // namespace

void EKSeriesSpec::validate() const {
    if (a < 1 || b < 1)
        throw std::domain_error("EKSeriesSpec: a, b must be positive");
    if (a + b < 3)
        throw std::domain_error("EKSeriesSpec: a+b < 3 unsupported");
    if (radius < 10)
        throw std::domain_error("EKSeriesSpec: radius must be >= 10");
    if (!(tau.imag() > 0))
        throw std::domain_error("EKSeriesSpec: Im(tau) must be positive");
}

KValue k_ab(const EKSeriesSpec& spec, const PrecisionContext& ctx, int threads) {
    spec.validate();
    const long R = spec.radius;
    const int a = spec.a, b = spec.b;
    const PhaseTable ph = PhaseTable::build(spec.point);
    const double sg = spec.tau.real().to_double();
    const double t = spec.tau.imag().to_double();
    const bool diag = (a == b);
    const int w2exp = a + b; // |w|^2 = Q^(a+b)

    auto fpoint = [&](long m, long n, double& ore, double& oim) {
        double A = static_cast<double>(m) * sg + static_cast<double>(n);
        double B = static_cast<double>(m) * t;
        double Q = A * A + B * B;
        long idx = ph.index(m, n);
        double c = ph.c[idx], s = ph.s[idx];
        if (diag) {
            double p = 1.0;
            for (int i = 0; i < a; ++i) p *= Q;
            ore = c / p;
            oim = s / p;
            return;
        }
        double zar, zai, zbr, zbi;
        cpow(A, B, a, zar, zai);
        cpow(A, -B, b, zbr, zbi);
        double wre = zar * zbr - zai * zbi;
        double wim = zar * zbi + zai * zbr;
        double w2 = 1.0;
        for (int i = 0; i < w2exp; ++i) w2 *= Q;
        // phase / w = (c + i s)(wre - i wim)/|w|^2
        ore = (c * wre + s * wim) / w2;
        oim = (s * wre - c * wim) / w2;
    };

    // negation-adjacent groups: Im parts of a = b sums cancel exactly
    std::vector<ShellC> shells(static_cast<std::size_t>(R) + 1);
    parallel_for(1, R + 1, [&](std::int64_t k) {
        KahanD are, aim;
        auto add_pair = [&](long m1, long n1, long m2, long n2) {
            double r1 = 0, i1 = 0, r2 = 0, i2 = 0;
            fpoint(m1, n1, r1, i1);
            fpoint(m2, n2, r2, i2);
            are.add(r1 + r2);
            aim.add(i1 + i2);
        };
        for (long tt = 0; tt < k; ++tt) {
            add_pair(k, tt, -k, -tt);
            add_pair(tt, k, -tt, -k);
        }
        for (long tt = 1; tt < k; ++tt) {
            add_pair(k, -tt, -k, tt);
            add_pair(-tt, k, tt, -k);
        }
        add_pair(k, k, -k, -k);
        add_pair(k, -k, -k, k);
        shells[static_cast<std::size_t>(k)] = {are.sum, are.comp, aim.sum, aim.comp};
    }, threads);

    const mpfr_prec_t prec = ctx.prec_bits();
    KahanR tre(prec), tim(prec);
    Complex half_value;
    const long khalf = R / 2;
    for (long k = 1; k <= R; ++k) {
        const auto& sh = shells[static_cast<std::size_t>(k)];
        tre.add(Real::of(sh.re, prec));
        tre.add(Real::of(sh.re_c, prec));
        tim.add(Real::of(sh.im, prec));
        tim.add(Real::of(sh.im_c, prec));
        if (k == khalf) half_value = Complex{tre.value(), tim.value()};
    }
    Complex value{tre.value(), tim.value()};

    KValue out{value, Real(prec), spec.conditionally_convergent()};
    if (a + b >= 4) {
        // |term| <= (lambda k^2)^(-(a+b)/2) on shell k
        Real lam = lattice_lambda_min(spec.tau);
        Real p = ctx.real(a + b) / 2;
        Real Rr = ctx.real(R);
        out.err_est = 8 * pow(lam, -p) * pow(Rr, ctx.real(2 - a - b)) / (a + b - 2);
    } else {
        out.err_est = abs(value - half_value); // Cauchy difference, empirical
    }
    return out;
}

Complex r_e(const ell::CurveContext& cc, const ell::TorsionPoint& pt, long radius,
            const PrecisionContext& ctx, int threads) {
    EKSeriesSpec spec{2, 1, cc.tau, pt, radius};
    KValue k21 = k_ab(spec, ctx, threads);
    Real pref = sqr(cc.im_tau) / const_pi(ctx);
    return k21.value * pref;
}

KValue k_ab_divisor(int a, int b, const Complex& tau, const ell::Divisor& div, long radius,
                    const PrecisionContext& ctx, int threads) {
    const mpfr_prec_t prec = ctx.prec_bits();
    KValue out{Complex{Real(prec), Real(prec)}, Real(prec), a + b == 3};
    for (const auto& [mult, pt] : div.terms) {
        KValue kv = k_ab({a, b, tau, pt, radius}, ctx, threads);
        out.value += kv.value * mult;
        out.err_est += kv.err_est * std::labs(mult);
    }
    return out;
}

VerificationReport k_det_relation_check(const ell::CurveContext& cc, const ell::Divisor& div1,
                                        const ell::Divisor& div2, long radius,
                                        const PrecisionContext& ctx, int threads) {
    if (div1.degree() != 0 || div2.degree() != 0)
        throw std::domain_error("k_det_relation_check: divisors must have degree zero");
    auto t0 = std::chrono::steady_clock::now();

    Real k13_1 = k_ab_divisor(1, 3, cc.tau, div1, radius, ctx, threads).value.real();
    Real k13_2 = k_ab_divisor(1, 3, cc.tau, div2, radius, ctx, threads).value.real();
    Real k22_1 = k_ab_divisor(2, 2, cc.tau, div1, radius, ctx, threads).value.real();
    Real k22_2 = k_ab_divisor(2, 2, cc.tau, div2, radius, ctx, threads).value.real();
    Real kdet = k13_1 * k22_2 - k13_2 * k22_1;

    Real ldet = ell::reg3_det(cc, div1, div2, ctx);
    Real pref = -2 * pow_si(cc.im_tau, 6) / sqr(const_pi(ctx));
    Real ratio = ldet / (pref * kdet);

    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::map<std::string, std::string> params{
        {"digits", std::to_string(ctx.digits)},
        {"radius", std::to_string(radius)},
        {"l3_det", ldet.str(16)},
        {"k_det", kdet.str(16)},
    };
    Real tol = Real::of("1e-4", ctx.prec_bits());
    return VerificationReport::make("intro-prop-kdet", ratio, ctx.real(1L), tol, params, ms,
                                    ctx.digits);
}

} // namespace ellsym2::ek
