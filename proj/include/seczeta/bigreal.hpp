// Arbitrary-precision reals on MPFR with a conservatively propagated error
// bound (a lightweight ball: value at working precision, error bound kept
// in a small upward-rounded register). Every operation widens the bound by
// the incoming errors plus one ulp of the freshly rounded result.

#pragma once

#include <mpfr.h>

#include "seczeta/quadsurd.hpp"
#include "seczeta/rational.hpp"

#include <string>
#include <utility>

namespace seczeta {

// bits needed for `digits` decimal digits plus guard
inline mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 32);
}

// Plain MPFR value with RAII and value semantics. Rounding is to nearest
// unless stated; precision travels with the value.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, 2); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec); mpfr_set_si(r.x_, v, MPFR_RNDN); return r;
    }
    static BigFloat from_double(double v, mpfr_prec_t prec) {
        BigFloat r(prec); mpfr_set_d(r.x_, v, MPFR_RNDN); return r;
    }
    static BigFloat from_rational(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat r(prec); mpfr_set_q(r.x_, v.raw().get_mpq_t(), rnd); return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r;
    }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    int sgn() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }

    std::string str(long digits) const;

private:
    mpfr_t x_;
};

// Value with accumulated error bound. err() is an upper bound on
// |true - mid()|; ops keep it conservative (outward rounding).
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 64);
    BigReal(const BigReal&);
    BigReal(BigReal&&) noexcept;
    BigReal& operator=(const BigReal&);
    BigReal& operator=(BigReal&&) noexcept;
    ~BigReal();

    static BigReal exact_long(long v, mpfr_prec_t prec);
    static BigReal exact_rational(const Rational& v, mpfr_prec_t prec);
    static BigReal exact_surd(const QuadSurd& v, mpfr_prec_t prec);
    static BigReal pi(mpfr_prec_t prec);
    // value known only up to +/- eps (e.g. external estimates)
    static BigReal with_error(const BigFloat& mid, const BigFloat& eps);

    mpfr_srcptr mid() const { return v_; }
    mpfr_srcptr err() const { return e_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal operator/(const BigReal& o) const;
    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o) { *this = *this + o; return *this; }
    BigReal& operator-=(const BigReal& o) { *this = *this - o; return *this; }

    BigReal abs() const;
    BigReal sqrt() const;
    BigReal pow_int(long e) const;

    BigReal sin() const;   // |f'| <= 1, error adds through
    BigReal cos() const;
    BigReal log() const;   // requires positive lower bound
    BigReal exp() const;

    // upper bound of |value|: |mid| + err, rounded up
    BigFloat abs_upper() const;
    // lower bound of |value|: max(|mid| - err, 0), rounded down
    BigFloat abs_lower() const;

    int mid_sgn() const { return mpfr_sgn(v_); }
    double mid_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double err_double() const { return mpfr_get_d(e_, MPFR_RNDU); }

    // error bound at least half the magnitude (or infinite)
    bool unresolved() const;

    // true if |value| is certainly below 10^-digits
    bool certainly_below_pow10(long digits) const;

    // decimal rendering "m.mmm...e+XX" of the midpoint at `digits`
    std::string str(long digits) const;
    // "value ± bound" rendering
    std::string str_with_error(long digits) const;

private:
    void bump_err_ulp();          // add one ulp of v_ to e_
    void add_err(mpfr_srcptr t);  // e_ += t (upward)

    mpfr_t v_;  // midpoint at working precision
    mpfr_t e_;  // error bound, small precision, rounded upward
};

}  // namespace seczeta
