#include "seczeta/bigreal.hpp"

#include <mutex>
#include <map>
#include <stdexcept>
#include <vector>

namespace seczeta {

namespace {
constexpr mpfr_prec_t kErrPrec = 32;
}

std::string BigFloat::str(long digits) const {
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return sgn() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (!m.empty() && m[0] == '-') { sign = "-"; m.erase(0, 1); }
    // strip trailing zeros but keep one digit
    size_t last = m.find_last_not_of('0');
    if (last == std::string::npos) last = 0;
    m.erase(last + 1);
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    long ex = static_cast<long>(e) - 1;  // mpfr exponent is for 0.mmm form
    if (ex != 0) out += "e" + std::string(ex > 0 ? "+" : "") + std::to_string(ex);
    return out;
}

// ------------------------------------------------------------------
// BigReal

BigReal::BigReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
    mpfr_init2(e_, kErrPrec);
    mpfr_set_zero(e_, 1);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_init2(e_, kErrPrec);
    mpfr_set(e_, o.e_, MPFR_RNDU);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_init2(e_, kErrPrec);
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
    return *this;
}

BigReal::~BigReal() {
    mpfr_clear(v_);
    mpfr_clear(e_);
}

void BigReal::bump_err_ulp() {
    if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return;
    mpfr_t u;
    mpfr_init2(u, kErrPrec);
    // ulp(v) <= 2^(exp - prec + 1)
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(v_) - mpfr_get_prec(v_) + 1, MPFR_RNDU);
    mpfr_add(e_, e_, u, MPFR_RNDU);
    mpfr_clear(u);
}

void BigReal::add_err(mpfr_srcptr t) {
    mpfr_add(e_, e_, t, MPFR_RNDU);
}

BigReal BigReal::exact_long(long v, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;  // representable exactly for any sane prec
}

BigReal BigReal::exact_rational(const Rational& v, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.v_, v.raw().get_mpq_t(), MPFR_RNDN);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::exact_surd(const QuadSurd& v, mpfr_prec_t prec) {
    // a + b sqrt(d), each stage at prec with ulp tracking
    BigReal a = exact_rational(v.a(), prec);
    if (v.is_rational()) return a;
    BigReal d = exact_long(v.d(), prec);
    BigReal b = exact_rational(v.b(), prec);
    return a + b * d.sqrt();
}

BigReal BigReal::pi(mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::with_error(const BigFloat& mid, const BigFloat& eps) {
    BigReal r(mid.prec());
    mpfr_set(r.v_, mid.raw(), MPFR_RNDN);
    mpfr_abs(r.e_, eps.raw(), MPFR_RNDU);
    return r;
}

BigReal BigReal::operator+(const BigReal& o) const {
    BigReal r(std::max(prec(), o.prec()));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    mpfr_add(r.e_, e_, o.e_, MPFR_RNDU);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
    BigReal r(std::max(prec(), o.prec()));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    mpfr_add(r.e_, e_, o.e_, MPFR_RNDU);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
    BigReal r(std::max(prec(), o.prec()));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    // |a||eb| + |b||ea| + ea*eb
    mpfr_t t, aa, bb;
    mpfr_init2(t, kErrPrec);
    mpfr_init2(aa, kErrPrec);
    mpfr_init2(bb, kErrPrec);
    mpfr_abs(aa, v_, MPFR_RNDU);
    mpfr_abs(bb, o.v_, MPFR_RNDU);
    mpfr_mul(t, aa, o.e_, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
    mpfr_mul(t, bb, e_, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
    mpfr_mul(t, e_, o.e_, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(aa);
    mpfr_clear(bb);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::operator/(const BigReal& o) const {
    BigReal r(std::max(prec(), o.prec()));
    // denominator magnitude lower bound; if it can reach 0 the quotient
    // carries an unbounded error
    mpfr_t lb;
    mpfr_init2(lb, kErrPrec);
    mpfr_abs(lb, o.v_, MPFR_RNDD);
    mpfr_sub(lb, lb, o.e_, MPFR_RNDD);
    if (mpfr_sgn(lb) <= 0) {
        mpfr_clear(lb);
        mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
        mpfr_set_inf(r.e_, 1);
        return r;
    }
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    // (ea + |a/b| * eb) / lb
    mpfr_t t, q;
    mpfr_init2(t, kErrPrec);
    mpfr_init2(q, kErrPrec);
    mpfr_abs(q, r.v_, MPFR_RNDU);
    mpfr_mul(t, q, o.e_, MPFR_RNDU);
    mpfr_add(t, t, e_, MPFR_RNDU);
    mpfr_div(t, t, lb, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(q);
    mpfr_clear(lb);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    BigReal r(prec());
    if (mpfr_sgn(v_) < 0) throw std::domain_error("sqrt of negative BigReal midpoint");
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    if (!mpfr_zero_p(e_)) {
        // derivative bound 1/(2 sqrt(lb)) over the interval; if the interval
        // reaches 0 fall back to |sqrt x - sqrt y| <= sqrt|x - y|
        mpfr_t lb, d;
        mpfr_init2(lb, kErrPrec);
        mpfr_init2(d, kErrPrec);
        mpfr_sub(lb, v_, e_, MPFR_RNDD);
        if (mpfr_sgn(lb) > 0) {
            mpfr_sqrt(lb, lb, MPFR_RNDD);
            mpfr_mul_ui(lb, lb, 2, MPFR_RNDD);
            mpfr_div(d, e_, lb, MPFR_RNDU);
        } else {
            mpfr_sqrt(d, e_, MPFR_RNDU);
        }
        mpfr_set(r.e_, d, MPFR_RNDU);
        mpfr_clear(lb);
        mpfr_clear(d);
    }
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::pow_int(long e) const {
    if (e == 0) return exact_long(1, prec());
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    BigReal acc = exact_long(1, prec());
    BigReal base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    if (neg) return exact_long(1, prec()) / acc;
    return acc;
}

BigReal BigReal::sin() const {
    BigReal r(prec());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    mpfr_set(r.e_, e_, MPFR_RNDU);  // |sin'| <= 1
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::cos() const {
    BigReal r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    mpfr_set(r.e_, e_, MPFR_RNDU);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::log() const {
    mpfr_t lb;
    mpfr_init2(lb, kErrPrec);
    mpfr_sub(lb, v_, e_, MPFR_RNDD);
    if (mpfr_sgn(lb) <= 0) {
        mpfr_clear(lb);
        throw std::domain_error("log of BigReal interval touching 0");
    }
    BigReal r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    if (!mpfr_zero_p(e_)) {
        // derivative bound 1/lb over the interval
        mpfr_t d;
        mpfr_init2(d, kErrPrec);
        mpfr_div(d, e_, lb, MPFR_RNDU);
        mpfr_set(r.e_, d, MPFR_RNDU);
        mpfr_clear(d);
    }
    mpfr_clear(lb);
    r.bump_err_ulp();
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    if (!mpfr_zero_p(e_)) {
        // derivative bound exp(v + e) over the interval
        mpfr_t up, d;
        mpfr_init2(up, kErrPrec + 8);
        mpfr_init2(d, kErrPrec);
        mpfr_add(up, v_, e_, MPFR_RNDU);
        mpfr_exp(up, up, MPFR_RNDU);
        mpfr_mul(d, e_, up, MPFR_RNDU);
        mpfr_set(r.e_, d, MPFR_RNDU);
        mpfr_clear(up);
        mpfr_clear(d);
    }
    r.bump_err_ulp();
    return r;
}

BigFloat BigReal::abs_upper() const {
    BigFloat b(prec());
    mpfr_abs(b.raw(), v_, MPFR_RNDU);
    mpfr_add(b.raw(), b.raw(), e_, MPFR_RNDU);
    return b;
}

BigFloat BigReal::abs_lower() const {
    BigFloat b(prec());
    mpfr_abs(b.raw(), v_, MPFR_RNDD);
    mpfr_sub(b.raw(), b.raw(), e_, MPFR_RNDD);
    if (mpfr_sgn(b.raw()) < 0) mpfr_set_zero(b.raw(), 1);
    return b;
}

bool BigReal::unresolved() const {
    if (mpfr_inf_p(e_) || mpfr_nan_p(v_)) return true;
    if (mpfr_zero_p(e_)) return false;
    mpfr_t half;
    mpfr_init2(half, kErrPrec);
    mpfr_abs(half, v_, MPFR_RNDD);
    mpfr_div_ui(half, half, 2, MPFR_RNDD);
    bool bad = mpfr_cmp(e_, half) >= 0;
    mpfr_clear(half);
    // a zero midpoint with any nonzero error bound is indistinguishable from 0
    if (mpfr_zero_p(v_)) bad = true;
    return bad;
}

bool BigReal::certainly_below_pow10(long digits) const {
    if (mpfr_inf_p(e_) || mpfr_nan_p(v_)) return false;
    mpfr_t thr, up;
    mpfr_init2(thr, 64);
    mpfr_init2(up, 64);
    mpfr_set_si(thr, 10, MPFR_RNDN);
    mpfr_pow_si(thr, thr, -digits, MPFR_RNDD);
    mpfr_abs(up, v_, MPFR_RNDU);
    mpfr_add(up, up, e_, MPFR_RNDU);
    bool ok = mpfr_cmp(up, thr) < 0;
    mpfr_clear(thr);
    mpfr_clear(up);
    return ok;
}

std::string BigReal::str(long digits) const {
    BigFloat b(prec());
    mpfr_set(b.raw(), v_, MPFR_RNDN);
    return b.str(digits);
}

std::string BigReal::str_with_error(long digits) const {
    BigFloat b(kErrPrec);
    mpfr_set(b.raw(), e_, MPFR_RNDU);
    return str(digits) + " ± " + b.str(3);
}

}  // namespace seczeta
