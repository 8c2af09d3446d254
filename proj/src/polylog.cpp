// polylog.cpp

#include "ellsym2/polylog.hpp"

#include <stdexcept>

namespace ellsym2::polylog {

namespace {

bool is_exact(const Complex& z, long re, long im) {
    return z.real() == re && z.imag() == im;
}

// closed forms at the 4th roots of unity (in terms of zeta, beta, pi); m in {2,3}
bool closed_form_4th_root(int m, const Complex& z, const PrecisionContext& ctx, Complex* out) {
    const mpfr_prec_t prec = ctx.prec_bits();
    Real zero(prec);
    if (is_exact(z, 1, 0)) {
        *out = Complex(zeta_int(m, ctx), zero);
        return true;
    }
    if (is_exact(z, -1, 0)) {
        // Li_m(-1) = -(1 - 2^(1-m)) zeta(m)
        Real eta = (1 - pow_si(ctx.real(2L), 1 - m)) * zeta_int(m, ctx);
        *out = Complex(-eta, zero);
        return true;
    }
    bool plus_i = is_exact(z, 0, 1);
    bool minus_i = is_exact(z, 0, -1);
    if (plus_i || minus_i) {
        Complex v;
        if (m == 2) {
            // Li_2(i) = -pi^2/48 + i beta(2)
            Real re = -sqr(const_pi(ctx)) / 48;
            v = Complex(re, dirichlet_beta(2, ctx));
        } else {
            // Li_3(i) = -(3/32) zeta(3) + i pi^3/32
            Real re = -3 * zeta_int(3, ctx) / 32;
            Real im = pow_si(const_pi(ctx), 3) / 32;
            v = Complex(re, im);
        }
        *out = minus_i ? v.conj() : v;
        return true;
    }
    return false;
}

// zeta(n) for n <= 1 as needed by the log-series: zeta(0) = -1/2,
// zeta(-2j) = 0, zeta(1-2j) = -B_2j/(2j)
Real zeta_nonpositive(int n, mpfr_prec_t prec) {
    if (n == 0) return Real::of(-1L, prec) / 2;
    if (n > 0 || n % 2 == 0) return Real(prec);
    int j2 = 1 - n; // = 2j
    return -to_real(bernoulli(j2), prec) / j2;
}

} // namespace

namespace detail {

Complex li_direct_series(int m, const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    if (z.is_zero()) return Complex(Real(prec), Real(prec));
    Real az = abs(z);
    if (!(az < 1))
        throw std::domain_error("li_direct_series: requires |z| < 1");
    const Real eps = ctx.working_tol() * Real::of("1e-2", prec);
    Complex sum{Real(prec), Real(prec)};
    Complex p{Real::of(1L, prec), Real(prec)};
    Real geom = 1 / (1 - az);
    Real azn = az;
    for (long n = 1; n < 1000000; ++n) {
        p *= z;
        sum += p / pow_si(Real::of(n, prec), m);
        azn *= az;
        // remaining tail <= |z|^(n+1)/(1-|z|)
        if (azn * geom < eps) return sum;
    }
    throw std::runtime_error("li_direct_series: no convergence");
}

Complex li_log_series(int m, const Complex& z, const PrecisionContext& ctx) {
    if (m != 2 && m != 3)
        throw std::domain_error("li_log_series: m must be 2 or 3");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() * Real::of("1e-2", prec);

    // mu = log z (principal); requires |mu| < 2 pi
    Complex mu(log(abs(z)), z.arg());
    if (!(abs(mu) < 6))
        throw std::domain_error("li_log_series: |log z| too large");
    // log(-mu), principal
    Complex neg_mu = -mu;
    Complex log_neg_mu(log(abs(neg_mu)), neg_mu.arg());

    // singular part: mu^(m-1)/(m-1)! (H_{m-1} - log(-mu))
    Real harmonic = (m == 2) ? ctx.real(1L) : ctx.real(3L) / 2;
    Complex mupow = (m == 2) ? mu : mu * mu / 2;
    Complex sum = mupow * (Complex(harmonic, Real(prec)) - log_neg_mu);

    // regular part: sum_{k>=0, k != m-1} zeta(m-k) mu^k/k!
    Complex term{Real::of(1L, prec), Real(prec)}; // mu^k / k!
    int below = 0;
    for (int k = 0; k <= 2000; ++k) {
        if (k > 0) {
            term *= mu;
            term = term / static_cast<long>(k);
        }
        if (k == m - 1) continue;
        int n = m - k;
        Real coef = (n >= 2) ? zeta_int(n, ctx) : zeta_nonpositive(n, prec);
        if (!coef.is_zero()) {
            Complex t = term * coef;
            sum += t;
            if (k > m + 1) {
                // successive nonzero terms shrink by ~(|mu|/2pi)^2 <= 0.26;
                // two consecutive small terms certify the tail
                if (abs(t) < eps) {
                    if (++below >= 2) return sum;
                } else {
                    below = 0;
                }
            }
        }
    }
    throw std::runtime_error("li_log_series: no convergence");
}

Real j_from_logz(const Real& logz, const Complex& z) {
    if (logz.is_zero()) return Real(logz.prec());
    return logz * log_abs_one_minus(z);
}

Real j3_from_logz(const Real& logz, const Complex& z) {
    if (logz.is_zero()) return Real(logz.prec());
    return sqr(logz) * log_abs_one_minus(z);
}

} // namespace detail

Complex li(int m, const Complex& z, const PrecisionContext& ctx) {
    if (m < 1 || m > 3)
        throw std::domain_error("li: m must be in {1, 2, 3}");
    Real az = abs(z);
    if (az > 1 + ctx.tol())
        throw std::domain_error("li: |z| > 1");

    if (m == 1) {
        if (is_exact(z, 1, 0))
            throw std::domain_error("li: Li_1(1) diverges");
        return Complex(-log_abs_one_minus(z), -arg_one_minus(z));
    }
    Complex cf;
    if (closed_form_4th_root(m, z, ctx, &cf)) return cf;
    Real nine_tenths = ctx.real(9L) / 10;
    if (az < nine_tenths) return detail::li_direct_series(m, z, ctx);
    return detail::li_log_series(m, z, ctx);
}

Real sv_trilog(const Complex& z, const PrecisionContext& ctx) {
    if (z.is_zero())
        throw std::domain_error("sv_trilog: z = 0");
    const mpfr_prec_t prec = ctx.prec_bits();
    if (is_exact(z, 1, 0)) return zeta_int(3, ctx); // log-weighted terms vanish
    Complex w = z;
    Real az = abs(w);
    if (az > 1) { // inversion convention: L3(z) = L3(1/z)
        w = cinv(w);
        az = abs(w);
    }
    Real lz = log(az);
    Complex li3 = li(3, w, ctx);
    Complex li2 = li(2, w, ctx);
    Real re_li1;
    if (is_exact(w, 1, 0)) {
        re_li1 = Real(prec); // only reachable with lz = 0; term drops out
    } else {
        re_li1 = -log_abs_one_minus(w);
    }
    return li3.real() - lz * li2.real() + sqr(lz) * re_li1 / 3;
}

Real bloch_wigner(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.prec_bits();
    if (z.is_zero() || is_exact(z, 1, 0)) return Real(prec); // continuous limit
    Complex w = z;
    Real az = abs(w);
    bool inverted = false;
    if (az > 1) { // L2(1/z) = -L2(z)
        w = cinv(w);
        az = abs(w);
        inverted = true;
    }
    Complex li2 = li(2, w, ctx);
    Real value = li2.imag() + log(az) * arg_one_minus(w);
    return inverted ? -value : value;
}

Real j_weight(const Complex& z, const PrecisionContext& ctx) {
    Real az = abs(z);
    if (az == 1 || is_exact(z, 1, 0)) return Real(ctx.prec_bits());
    return detail::j_from_logz(log(az), z);
}

Real j3_weight(const Complex& z, const PrecisionContext& ctx) {
    Real az = abs(z);
    if (az == 1 || is_exact(z, 1, 0)) return Real(ctx.prec_bits());
    return detail::j3_from_logz(log(az), z);
}

Real bernoulli_b3(const Real& x) {
    // X^3 - 3X^2/2 + X/2
    return ((x - 1) * x * (2 * x - 1)) / 2;
}

} // namespace ellsym2::polylog
