// precision.hpp
//
// Arbitrary-precision real/complex scalars on top of MPFR and the precision
// contract shared by every evaluation routine.  A PrecisionContext asks for
// `digits` correct decimal digits; all internal arithmetic runs at
// digits + guard_digits decimals and comparisons against tolerances use
// absolute error.

#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ellsym2 {

class Real;

struct PrecisionContext {
    int digits = 20;       // requested decimal precision
    int guard_digits = 10; // internal padding

    PrecisionContext() = default;
    PrecisionContext(int d, int g) : digits(d), guard_digits(g) { validate(); }
    explicit PrecisionContext(int d) : digits(d) { validate(); }

    void validate() const {
        if (digits < 15)
            throw std::domain_error("PrecisionContext: digits must be >= 15");
        if (guard_digits < 10)
            throw std::domain_error("PrecisionContext: guard_digits must be >= 10");
    }

    int working_digits() const { return digits + guard_digits; }

    // bits needed for working_digits decimals, with a little slack
    mpfr_prec_t prec_bits() const {
        return static_cast<mpfr_prec_t>(3.3219280948873626 * working_digits()) + 16;
    }

    Real tol() const;          // 10^(-digits)
    Real working_tol() const;  // 10^(-working_digits), used for truncation targets
    Real real(long n) const;
    Real real(int n) const;
    Real real(double x) const;
    Real real(const std::string& s) const;
};

// RAII wrapper over mpfr_t.  Every Real carries its own precision (set at
// construction, normally ctx.prec_bits()); binary operations round into a
// result whose precision is the max of the operands'.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of(int n, mpfr_prec_t prec) { return of(static_cast<long>(n), prec); }
    static Real of(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse \"" + s + "\"");
        return r;
    }
    // rounded copy at a different precision
    static Real with_prec(const Real& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // "d.ddd...e±xx" with `ndigits` significant digits; deterministic
    std::string str(int ndigits) const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend Real operator-(const Real& x) {
        Real r(x.prec());
        mpfr_neg(r.v_, x.v_, MPFR_RNDN);
        return r;
    }

#define ELLSYM2_BINOP(op, fn)                                        \
    friend Real operator op(const Real& a, const Real& b) {          \
        Real r(std::max(a.prec(), b.prec()));                        \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
        return r;                                                    \
    }                                                                \
    friend Real operator op(const Real& a, long b) {                 \
        Real r(a.prec());                                            \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                           \
        return r;                                                    \
    }

    ELLSYM2_BINOP(+, mpfr_add)
    ELLSYM2_BINOP(-, mpfr_sub)
    ELLSYM2_BINOP(*, mpfr_mul)
    ELLSYM2_BINOP(/, mpfr_div)
#undef ELLSYM2_BINOP

    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  private:
    mpfr_t v_;
};

#define ELLSYM2_UNARY(name, fn)          \
    inline Real name(const Real& x) {    \
        Real r(x.prec());                \
        fn(r.raw(), x.raw(), MPFR_RNDN); \
        return r;                        \
    }

ELLSYM2_UNARY(abs, mpfr_abs)
ELLSYM2_UNARY(sqrt, mpfr_sqrt)
ELLSYM2_UNARY(exp, mpfr_exp)
ELLSYM2_UNARY(log, mpfr_log)
ELLSYM2_UNARY(log1p, mpfr_log1p)
ELLSYM2_UNARY(expm1, mpfr_expm1)
ELLSYM2_UNARY(sin, mpfr_sin)
ELLSYM2_UNARY(cos, mpfr_cos)
ELLSYM2_UNARY(atan, mpfr_atan)
#undef ELLSYM2_UNARY

inline Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}
inline Real round_nearest(const Real& x) {
    Real r(x.prec());
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& x, long n) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& x, const Real& y) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline void sin_cos(Real& s, Real& c, const Real& x) {
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}
inline Real sqr(const Real& x) {
    Real r(x.prec());
    mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline const Real& min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline const Real& max(const Real& a, const Real& b) { return a >= b ? a : b; }
// fractional part in [0, 1)
inline Real frac(const Real& x) { return x - floor(x); }

inline Real PrecisionContext::real(long n) const { return Real::of(n, prec_bits()); }
inline Real PrecisionContext::real(int n) const { return Real::of(static_cast<long>(n), prec_bits()); }
inline Real PrecisionContext::real(double x) const { return Real::of(x, prec_bits()); }
inline Real PrecisionContext::real(const std::string& s) const { return Real::of(s, prec_bits()); }
inline Real PrecisionContext::tol() const {
    Real r(prec_bits());
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), -digits, MPFR_RNDN);
    return r;
}
inline Real PrecisionContext::working_tol() const {
    Real r(prec_bits());
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), -working_digits(), MPFR_RNDN);
    return r;
}

// Complex scalar as a pair of Reals.  Only what the project needs; no
// attempt at a full std::complex replacement.
class Complex {
  public:
    Complex() = default;
    explicit Complex(Real re) : re_(std::move(re)), im_(Real(re_.prec())) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex of(long re, long im, mpfr_prec_t prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    Real& real() { return re_; }
    Real& imag() { return im_; }

    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator*(const Complex& a, const Real& b) {
        return {a.re_ * b, a.im_ * b};
    }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator*(const Complex& a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend Complex operator/(const Complex& a, const Real& b) {
        return {a.re_ / b, a.im_ / b};
    }
    friend Complex operator/(const Complex& a, long b) { return {a.re_ / b, a.im_ / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.norm();
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex conj() const { return {re_, -im_}; }
    Real norm() const { return sqr(re_) + sqr(im_); } // |z|^2
    Real abs() const { return hypot(re_, im_); }
    Real arg() const { return atan2(im_, re_); }

  private:
    Real re_, im_;
};

inline Complex conj(const Complex& z) { return z.conj(); }
inline Real abs(const Complex& z) { return z.abs(); }

// exp(z) = e^Re(z) (cos Im z + i sin Im z)
inline Complex cexp(const Complex& z) {
    Real m = exp(z.real());
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.imag());
    return {m * c, m * s};
}

// 1/z
inline Complex cinv(const Complex& z) {
    Real n = z.norm();
    return {z.real() / n, -z.imag() / n};
}

// log|1-z| computed as log1p(|z|^2 - 2 Re z)/2, accurate for small z
inline Real log_abs_one_minus(const Complex& z) {
    return log1p(z.norm() - 2 * z.real()) / 2;
}

// arg(1-z)
inline Real arg_one_minus(const Complex& z) {
    return atan2(-z.imag(), 1 - z.real());
}

} // namespace ellsym2
