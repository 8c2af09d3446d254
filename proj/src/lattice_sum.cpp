// lattice_sum.cpp

#include "ellsym2/lattice_sum.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>

#include "ellsym2/constants.hpp"
#include "ellsym2/summation.hpp"

namespace ellsym2::lattice {

namespace {

inline std::int64_t weight_of(Weight w, long m, long n) {
    switch (w) {
        case Weight::One: return 1;
        case Weight::MSq: return static_cast<std::int64_t>(m) * m;
        case Weight::NSq: return static_cast<std::int64_t>(n) * n;
        case Weight::MSqMinusNSq:
            return static_cast<std::int64_t>(m) * m - static_cast<std::int64_t>(n) * n;
        case Weight::MSqMinus4NSq:
            return static_cast<std::int64_t>(m) * m - 4 * static_cast<std::int64_t>(n) * n;
    }
    return 0;
}

inline int mask_of(Mask k, long m, long n) {
    switch (k) {
        case Mask::All: return 1;
        case Mask::MEven: return (m & 1) == 0 ? 1 : 0;
        case Mask::NEven: return (n & 1) == 0 ? 1 : 0;
        case Mask::BothEven: return ((m | n) & 1) == 0 ? 1 : 0;
        case Mask::MOdd: return (m & 1) != 0 ? 1 : 0;
        case Mask::AltM: return (m & 1) ? -1 : 1;
        case Mask::AltN: return (n & 1) ? -1 : 1;
        case Mask::AltMMinusAltN: return ((m & 1) ? -1 : 1) - ((n & 1) ? -1 : 1);
    }
    return 0;
}

struct PowEval {
    double s;
    long s_int; // s when integral, else 0
    explicit PowEval(double s_) : s(s_) {
        double fl = std::floor(s_);
        s_int = (fl == s_ && s_ >= 1 && s_ <= 16) ? static_cast<long>(s_) : 0;
    }
    double operator()(std::int64_t q) const {
        double invq = 1.0 / static_cast<double>(q);
        if (s_int == 2) return invq * invq;
        if (s_int == 3) return invq * invq * invq;
        if (s_int > 0) {
            double p = 1.0;
            for (long i = 0; i < s_int; ++i) p *= invq;
            return p;
        }
        return std::pow(static_cast<double>(q), -s);
    }
};

} // namespace

void LatticeSumSpec::validate() const {
    if (form_c != 1 && form_c != 4)
        throw std::domain_error("LatticeSumSpec: form_c must be 1 or 4");
    if (radius < 10)
        throw std::domain_error("LatticeSumSpec: radius must be >= 10");
    if (!(2.0 * s - weight_degree() > 2.0))
        throw std::domain_error("LatticeSumSpec: divergent sum (needs 2s - deg(w) > 2)");
}

SumResult evaluate(const LatticeSumSpec& spec, const PrecisionContext& ctx, int threads) {
    spec.validate();
    const long R = spec.radius;
    const long c = spec.form_c;
    const Weight w = spec.weight;
    const Mask mk = spec.mask;
    const PowEval pw(spec.s);

    auto point = [&](long m, long n) -> double {
        int mf = mask_of(mk, m, n);
        if (mf == 0) return 0.0;
        std::int64_t wt = weight_of(w, m, n);
        if (wt == 0) return 0.0;
        std::int64_t q = static_cast<std::int64_t>(m) * m + c * static_cast<std::int64_t>(n) * n;
        return static_cast<double>(wt * mf) * pw(q);
    };

    // Shell sums are compensated independently; within a shell, swap-partners
    // are combined in plain doubles first so antisymmetric weights cancel
    // exactly at every radius.
    std::vector<KahanD> shells(static_cast<std::size_t>(R) + 1);
    parallel_for(1, R + 1, [&](std::int64_t k) {
        KahanD acc;
        for (long t = 0; t < k; ++t) {
            double g = point(k, t);
            g += point(t, k);
            g += point(-k, -t);
            g += point(-t, -k);
            acc.add(g);
        }
        for (long t = 1; t < k; ++t) {
            double g = point(k, -t);
            g += point(-t, k);
            g += point(-k, t);
            g += point(t, -k);
            acc.add(g);
        }
        acc.add(point(k, k) + point(-k, -k));
        acc.add(point(k, -k) + point(-k, k));
        shells[static_cast<std::size_t>(k)] = acc;
    }, threads);

    const mpfr_prec_t prec = ctx.prec_bits();
    KahanR total(prec);
    for (long k = 1; k <= R; ++k) {
        const KahanD& sh = shells[static_cast<std::size_t>(k)];
        total.add(Real::of(sh.sum, prec));
        total.add(Real::of(sh.comp, prec));
    }

    // tail: |w*mask| <= maskmax * Q^(deg/2), Q >= k^2 on shell k, so
    // sum_{k>R} 8k * maskmax * k^(-2 sigma) <= 4 maskmax R^(2-2 sigma)/(sigma-1)
    double sigma = spec.s - spec.weight_degree() / 2.0;
    long maskmax = (mk == Mask::AltMMinusAltN) ? 2 : 1;
    Real sig = ctx.real(sigma);
    Real bound = 4 * maskmax * pow(ctx.real(static_cast<long>(R)), 2 - 2 * sig) / (sig - 1);

    return SumResult{total.value(), bound};
}

namespace {

long now_ms_counter() {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

std::map<std::string, std::string> base_params(const PrecisionContext& ctx, long radius) {
    return {{"digits", std::to_string(ctx.digits)}, {"radius", std::to_string(radius)}};
}

} // namespace

std::vector<VerificationReport> verify_e1_e2(const PrecisionContext& ctx, long radius,
                                             int threads) {
    std::vector<VerificationReport> out;
    long t0 = now_ms_counter();

    auto ev = [&](Weight w, Mask m, double s) {
        return evaluate({w, m, 1, s, radius}, ctx, threads);
    };

    // E1: sum'_{m,n even} 1/Q^2 + sum'_{m even} 1/Q^2 = sum' m^2/Q^3
    SumResult ee = ev(Weight::One, Mask::BothEven, 2.0);
    SumResult me = ev(Weight::One, Mask::MEven, 2.0);
    SumResult msq = ev(Weight::MSq, Mask::All, 3.0);
    Real lhs1 = ee.value + me.value;
    Real tol1 = ee.tail_bound + me.tail_bound + msq.tail_bound;
    out.push_back(VerificationReport::make("lemma4.1-e1", lhs1, msq.value, tol1,
                                           base_params(ctx, radius), now_ms_counter() - t0,
                                           ctx.digits));

    // E2: sum'_{m,n even} 1/Q^2 + sum_{m even} n^2/Q^3 = sum_{m odd} m^2/Q^3
    t0 = now_ms_counter();
    SumResult nsq_me = ev(Weight::NSq, Mask::MEven, 3.0);
    SumResult msq_mo = ev(Weight::MSq, Mask::MOdd, 3.0);
    Real lhs2 = ee.value + nsq_me.value;
    Real tol2 = ee.tail_bound + nsq_me.tail_bound + msq_mo.tail_bound;
    out.push_back(VerificationReport::make("lemma4.1-e2", lhs2, msq_mo.value, tol2,
                                           base_params(ctx, radius), now_ms_counter() - t0,
                                           ctx.digits));
    return out;
}

std::vector<VerificationReport> prop32_check(int t, const PrecisionContext& ctx, long radius,
                                             int threads) {
    if (t < 2) throw std::domain_error("prop32_check: t must be >= 2");
    std::vector<VerificationReport> out;
    Real beta = dirichlet_beta(t, ctx);
    Real zeta = zeta_int(t, ctx);
    double td = static_cast<double>(t);

    long t0 = now_ms_counter();
    SumResult full = evaluate({Weight::One, Mask::All, 1, td, radius}, ctx, threads);
    Real lhs_a = full.value / (4 * zeta);
    auto params = base_params(ctx, radius);
    params["t"] = std::to_string(t);
    params["form"] = "m^2+n^2";
    out.push_back(VerificationReport::make("prop3.2-form-c1", lhs_a, beta,
                                           full.tail_bound / (4 * zeta), params,
                                           now_ms_counter() - t0, ctx.digits));

    t0 = now_ms_counter();
    SumResult c4 = evaluate({Weight::One, Mask::All, 4, td, radius}, ctx, threads);
    // 1 / (2 (1 - 2^-t + 2^(1-2t)) zeta(t))
    Real two = ctx.real(2L);
    Real factor = 2 * (1 - pow_si(two, -t) + pow_si(two, 1 - 2 * t)) * zeta;
    Real lhs_b = c4.value / factor;
    params["form"] = "m^2+4n^2";
    out.push_back(VerificationReport::make("prop3.2-form-c4", lhs_b, beta,
                                           c4.tail_bound / factor, params,
                                           now_ms_counter() - t0, ctx.digits));
    return out;
}

} // namespace ellsym2::lattice
