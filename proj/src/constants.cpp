// constants.cpp

#include "ellsym2/constants.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace ellsym2 {

namespace {

// ---------------------------------------------------------------- caches

std::mutex g_bernoulli_mu;
std::vector<Rational> g_bernoulli; // B_0, B_1, ...

std::mutex g_factorial_mu;
std::vector<mpz_class> g_factorial;

struct ZetaKey {
    mpfr_prec_t prec;
    int m;
    bool operator<(const ZetaKey& o) const {
        return prec != o.prec ? prec < o.prec : m < o.m;
    }
};
std::mutex g_zeta_mu;
std::map<ZetaKey, Real> g_zeta_cache;
std::mutex g_beta_mu;
std::map<ZetaKey, Real> g_beta_cache;

} // namespace

Real const_pi(const PrecisionContext& ctx) {
    Real r(ctx.prec_bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_log2(const PrecisionContext& ctx) {
    Real r(ctx.prec_bits());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler(const PrecisionContext& ctx) {
    Real r(ctx.prec_bits());
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

const Rational& bernoulli(int n) {
    if (n < 0) throw std::domain_error("bernoulli: n < 0");
    std::lock_guard<std::mutex> lock(g_bernoulli_mu);
    if (g_bernoulli.empty()) {
        g_bernoulli.push_back(Rational(1));        // B_0
        g_bernoulli.push_back(Rational(-1, 2));    // B_1
    }
    // B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
    while (static_cast<int>(g_bernoulli.size()) <= n) {
        int k = static_cast<int>(g_bernoulli.size());
        if (k % 2 == 1) {
            g_bernoulli.push_back(Rational(0));
            continue;
        }
        Rational acc(0);
        mpz_class binom;
        for (int j = 0; j < k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
            acc += Rational(binom) * g_bernoulli[j];
        }
        Rational b = -acc / Rational(k + 1);
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
    return g_bernoulli[n];
}

const mpz_class& factorial_int(unsigned n) {
    std::lock_guard<std::mutex> lock(g_factorial_mu);
    if (g_factorial.empty()) g_factorial.push_back(mpz_class(1));
    while (g_factorial.size() <= n) {
        g_factorial.push_back(g_factorial.back() * mpz_class(static_cast<unsigned long>(g_factorial.size())));
    }
    return g_factorial[n];
}

namespace {

// Euler-Maclaurin tail of sum_{k>=N} (k+a)^(-m):
//   (N+a)^(1-m)/(m-1) + (N+a)^(-m)/2
//   + sum_j B_2j/(2j)! * (m)(m+1)...(m+2j-2) * (N+a)^(-m-2j+1)
// Correction order is chosen adaptively from the working tolerance; the
// correction terms first decrease, and we stop as soon as one drops below
// the target (or start over with a larger N if they grow first).
Real em_zeta(int m, const Real& a, const PrecisionContext& ctx) {
    if (m < 2) throw std::domain_error("zeta: exponent must be >= 2");
    const mpfr_prec_t prec = ctx.prec_bits();
    const Real eps = ctx.working_tol() * Real::of("1e-2", prec);

    long N = 2 * ctx.working_digits() + 8;
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        // direct part: sum_{k=0}^{N-1} (k+a)^(-m)
        Real s(prec);
        for (long k = 0; k < N; ++k) {
            Real base = a + k;
            s += pow_si(base, -m);
        }
        Real Na = a + N;
        Real tail = pow_si(Na, 1 - m) / (m - 1) + pow_si(Na, -m) / 2;

        // Bernoulli corrections
        Real deriv_factor = Real::of(m, prec); // (m)(m+1)...(m+2j-2), starts at j=1
        Real power = pow_si(Na, -m - 1);
        Real inv_Na2 = pow_si(Na, -2);
        bool converged = false;
        Real prev_mag(prec);
        bool have_prev = false;
        for (int j = 1; j <= 400; ++j) {
            Real coef = to_real(bernoulli(2 * j), prec);
            mpz_class f = factorial_int(static_cast<unsigned>(2 * j));
            Real fac(prec);
            mpfr_set_z(fac.raw(), f.get_mpz_t(), MPFR_RNDN);
            Real term = coef / fac * deriv_factor * power;
            Real mag = ellsym2::abs(term);
            if (have_prev && mag > prev_mag) break; // diverging: restart with larger N
            tail += term;
            if (mag < eps) {
                converged = true;
                break;
            }
            prev_mag = mag;
            have_prev = true;
            // advance to next correction: multiply by (m+2j-1)(m+2j) / (N+a)^2
            deriv_factor *= (m + 2 * j - 1);
            deriv_factor *= (m + 2 * j);
            power *= inv_Na2;
        }
        if (converged) return s + tail;
    }
    throw std::runtime_error("zeta: Euler-Maclaurin failed to converge");
}

} // namespace

Real hurwitz_zeta_int(int m, const Real& a, const PrecisionContext& ctx) {
    if (!(a > 0))
        throw std::domain_error("hurwitz_zeta_int: a must be positive");
    return em_zeta(m, a, ctx);
}

Real zeta_int(int m, const PrecisionContext& ctx) {
    if (m < 2) throw std::domain_error("zeta_int: m must be >= 2");
    {
        std::lock_guard<std::mutex> lock(g_zeta_mu);
        auto it = g_zeta_cache.find({ctx.prec_bits(), m});
        if (it != g_zeta_cache.end()) return it->second;
    }
    Real value(ctx.prec_bits());
    if (m % 2 == 0) {
        // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)
        int k = m / 2;
        Real twopi = 2 * const_pi(ctx);
        Real num = to_real(bernoulli(m), ctx.prec_bits()) * pow_si(twopi, m);
        Real fac(ctx.prec_bits());
        mpfr_set_z(fac.raw(), factorial_int(static_cast<unsigned>(m)).get_mpz_t(), MPFR_RNDN);
        value = num / (2 * fac);
        if (k % 2 == 0) value = -value;
    } else {
        value = em_zeta(m, ctx.real(1L), ctx);
    }
    std::lock_guard<std::mutex> lock(g_zeta_mu);
    g_zeta_cache.insert({{ctx.prec_bits(), m}, value});
    return value;
}

Real dirichlet_beta(int m, const PrecisionContext& ctx) {
    if (m < 1) throw std::domain_error("dirichlet_beta: m must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_beta_mu);
        auto it = g_beta_cache.find({ctx.prec_bits(), m});
        if (it != g_beta_cache.end()) return it->second;
    }
    // Cohen-Rodriguez Villegas-Zagier acceleration of
    // sum_k (-1)^k a_k with a_k = (2k+1)^(-m); error ~ (3+sqrt 8)^(-n).
    const mpfr_prec_t prec = ctx.prec_bits();
    long n = static_cast<long>(1.32 * ctx.working_digits()) + 8;
    Real d = pow_si(Real::of(3, prec) + sqrt(Real::of(8, prec)), n);
    d = (d + 1 / d) / 2;
    Real b = Real::of(-1L, prec);
    Real c = -d;
    Real s(prec);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * pow_si(Real::of(2 * k + 1, prec), -m);
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        b *= (k + n);
        b *= (k - n);
        b /= k + 1;
        Real half = Real::of(2 * k + 1, prec) / 2;
        b /= half;
    }
    Real value = s / d;
    std::lock_guard<std::mutex> lock(g_beta_mu);
    g_beta_cache.insert({{prec, m}, value});
    return value;
}

Real dirichlet_beta_hurwitz(int m, const PrecisionContext& ctx) {
    if (m < 2) throw std::domain_error("dirichlet_beta_hurwitz: m must be >= 2");
    Real quarter = ctx.real(1L) / 4;
    Real three_quarter = ctx.real(3L) / 4;
    Real diff = hurwitz_zeta_int(m, quarter, ctx) - hurwitz_zeta_int(m, three_quarter, ctx);
    return diff / pow_si(ctx.real(4L), m);
}

} // namespace ellsym2
