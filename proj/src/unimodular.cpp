#include "seczeta/unimodular.hpp"

#include "seczeta/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace seczeta {

std::string IntPolynomial::str() const {
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = coeff[static_cast<size_t>(i)];
        if (c == 0 && degree() > 0) continue;
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Int a = abs(c);
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

IntPolynomial make_int_polynomial(const std::vector<Rational>& rational_coeffs) {
    std::vector<Rational> rc = rational_coeffs;
    while (!rc.empty() && rc.back().is_zero()) rc.pop_back();
    if (rc.empty()) throw std::domain_error("make_int_polynomial: zero polynomial");
    Int scale(1);
    for (const Rational& r : rc) {
        Int l;
        mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), r.den().get_mpz_t());
        scale = l;
    }
    IntPolynomial p;
    p.scale = scale;
    p.coeff.reserve(rc.size());
    Int g(0);
    for (const Rational& r : rc) {
        Rational t = r * Rational(scale);
        p.coeff.push_back(t.num());  // t.den() == 1 by choice of scale
        Int ng;
        mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), t.num().get_mpz_t());
        g = ng;
    }
    p.content = g;
    for (Int& c : p.coeff) c /= g;
    return p;
}

IntPolynomial conj_poly(unsigned k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("conj_poly: need even k >= 2");
    std::vector<Rational> acc(k + 2, Rational(0));
    for (unsigned m = 0; m <= k; ++m) {
        if (m > 1 && m % 2 != 0) continue;  // odd Bernoulli numbers vanish
        Int p2(1);
        p2 <<= m;
        Rational factor = Rational(Int(p2 * (p2 - 2))) * bernoulli(m) *
                          Rational(euler_number(k - m)) * Rational(binomial(k, static_cast<long>(m)));
        if (factor.is_zero()) continue;  // kills m = 1
        // (x - x^m)(1+x)^{k-m}
        for (unsigned i = 0; i <= k - m; ++i) {
            Rational c = factor * Rational(binomial(k - m, static_cast<long>(i)));
            acc[i + 1] += c;
            acc[i + m] -= c;
        }
    }
    return make_int_polynomial(acc);
}

bool self_inversive_check(const IntPolynomial& p) {
    if (p.coeff.empty()) throw std::domain_error("self_inversive_check: zero polynomial");
    size_t lo = 0;
    while (lo < p.coeff.size() && p.coeff[lo] == 0) ++lo;  // strip roots at 0
    size_t n = p.coeff.size() - 1;
    int eps;
    if (p.coeff[lo] == p.coeff[n]) eps = 1;
    else if (p.coeff[lo] == -p.coeff[n]) eps = -1;
    else return false;
    for (size_t i = lo; i <= n; ++i) {
        const Int& a = p.coeff[i];
        const Int& b = p.coeff[lo + n - i];
        if ((eps > 0 && a != b) || (eps < 0 && a != -b)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// root finding

namespace {

// minimal complex pair on BigFloat, plain rounding; rigor comes from the
// explicit slack factor on the a posteriori radii
struct CF {
    BigFloat re, im;
    explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

CF cadd(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    return r;
}

CF csub(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    return r;
}

CF cmul(const CF& a, const CF& b, mpfr_prec_t p) {
    CF r(p);
    BigFloat t1(p), t2(p);
    mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(r.re.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    mpfr_mul(t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(r.im.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    return r;
}

BigFloat cabs(const CF& a, mpfr_prec_t p) {
    BigFloat r(p);
    mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
    return r;
}

CF cdiv(const CF& a, const CF& b, mpfr_prec_t p) {
    BigFloat n2(p);
    mpfr_hypot(n2.raw(), b.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sqr(n2.raw(), n2.raw(), MPFR_RNDN);
    CF conj(p);
    mpfr_set(conj.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_neg(conj.im.raw(), b.im.raw(), MPFR_RNDN);
    CF num = cmul(a, conj, p);
    CF r(p);
    mpfr_div(r.re.raw(), num.re.raw(), n2.raw(), MPFR_RNDN);
    mpfr_div(r.im.raw(), num.im.raw(), n2.raw(), MPFR_RNDN);
    return r;
}

// Horner evaluation of an integer polynomial
CF poly_eval(const std::vector<Int>& c, const CF& z, mpfr_prec_t p) {
    CF acc(p);
    for (size_t i = c.size(); i-- > 0;) {
        acc = cmul(acc, z, p);
        mpfr_add_z(acc.re.raw(), acc.re.raw(), c[i].get_mpz_t(), MPFR_RNDN);
    }
    return acc;
}

std::vector<Int> derivative(const std::vector<Int>& c) {
    std::vector<Int> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(Int(c[i] * static_cast<long>(i)));
    if (d.empty()) d.push_back(Int(0));
    return d;
}

// --- exact squarefree deflation over the rationals ---

std::vector<Rational> to_rational(const std::vector<Int>& c) {
    std::vector<Rational> r;
    r.reserve(c.size());
    for (const Int& x : c) r.push_back(Rational(x));
    return r;
}

void trim(std::vector<Rational>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// remainder of a / b, in place arithmetic over Q
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size()) {
        Rational q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// normalize to monic to keep coefficient growth in check
void monic(std::vector<Rational>& a) {
    if (a.empty()) return;
    Rational l = a.back();
    for (Rational& c : a) c = c / l;
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<Rational> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    monic(a);
    return a;
}

// exact quotient a / b (remainder known to vanish)
std::vector<Rational> poly_div_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

BigFloat pow10_neg_half(long digits) {
    BigFloat t(64);
    mpfr_ui_pow_ui(t.raw(), 10, static_cast<unsigned long>(digits / 2), MPFR_RNDU);
    mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDD);
    return t;
}

}  // namespace

UnimodularReport unit_circle_deviation(const IntPolynomial& poly, long digits) {
    if (poly.degree() < 1) throw std::domain_error("unit_circle_deviation: need degree >= 1");
    mpfr_prec_t p = bits_for_digits(digits + 10) + 32;

    // squarefree part: repeated roots stall the simultaneous iteration
    std::vector<Rational> pq = to_rational(poly.coeff);
    std::vector<Rational> g = poly_gcd(pq, to_rational(derivative(poly.coeff)));
    std::vector<Int> work = poly.coeff;
    if (g.size() > 1) work = make_int_polynomial(poly_div_exact(pq, g)).coeff;
    size_t n = work.size() - 1;
    std::vector<Int> dwork = derivative(work);

    // initial guesses on a slightly perturbed circle at the Cauchy bound
    BigFloat radius = BigFloat::from_long(1, p);
    {
        BigFloat m(64), t(64);
        mpfr_set_zero(m.raw(), 1);
        for (size_t i = 0; i < n; ++i) {
            mpfr_set_z(t.raw(), work[i].get_mpz_t(), MPFR_RNDU);
            mpfr_abs(t.raw(), t.raw(), MPFR_RNDU);
            if (mpfr_cmp(t.raw(), m.raw()) > 0) mpfr_set(m.raw(), t.raw(), MPFR_RNDU);
        }
        mpfr_set_z(t.raw(), work[n].get_mpz_t(), MPFR_RNDD);
        mpfr_abs(t.raw(), t.raw(), MPFR_RNDD);
        mpfr_div(m.raw(), m.raw(), t.raw(), MPFR_RNDU);
        mpfr_add_ui(m.raw(), m.raw(), 1, MPFR_RNDU);
        mpfr_set(radius.raw(), m.raw(), MPFR_RNDN);
    }
    std::vector<CF> z(n, CF(p));
    {
        BigFloat pi(p), ang(p);
        mpfr_const_pi(pi.raw(), MPFR_RNDN);
        for (size_t i = 0; i < n; ++i) {
            mpfr_mul_ui(ang.raw(), pi.raw(), 2 * static_cast<unsigned long>(i), MPFR_RNDN);
            mpfr_div_ui(ang.raw(), ang.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
            mpfr_add_d(ang.raw(), ang.raw(), 0.41, MPFR_RNDN);
            mpfr_cos(z[i].re.raw(), ang.raw(), MPFR_RNDN);
            mpfr_sin(z[i].im.raw(), ang.raw(), MPFR_RNDN);
            mpfr_mul(z[i].re.raw(), z[i].re.raw(), radius.raw(), MPFR_RNDN);
            mpfr_mul(z[i].im.raw(), z[i].im.raw(), radius.raw(), MPFR_RNDN);
        }
    }

    // Aberth-Ehrlich sweeps
    BigFloat tol(64);
    mpfr_set_ui_2exp(tol.raw(), 1, -(p - 16), MPFR_RNDN);
    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
        converged = true;
        for (size_t i = 0; i < n; ++i) {
            CF pv = poly_eval(work, z[i], p);
            CF dv = poly_eval(dwork, z[i], p);
            if (mpfr_zero_p(dv.re.raw()) && mpfr_zero_p(dv.im.raw())) {
                mpfr_add_d(z[i].re.raw(), z[i].re.raw(), 1e-3, MPFR_RNDN);
                converged = false;
                continue;
            }
            CF w = cdiv(pv, dv, p);
            CF s(p);
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                CF d = csub(z[i], z[j], p);
                CF one(p);
                mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
                s = cadd(s, cdiv(one, d, p), p);
            }
            CF ws = cmul(w, s, p);
            CF den(p);
            mpfr_ui_sub(den.re.raw(), 1, ws.re.raw(), MPFR_RNDN);
            mpfr_neg(den.im.raw(), ws.im.raw(), MPFR_RNDN);
            CF step = cdiv(w, den, p);
            z[i] = csub(z[i], step, p);
            // relative step against 1 + |z|
            BigFloat sz = cabs(step, p), zz = cabs(z[i], p);
            mpfr_add_ui(zz.raw(), zz.raw(), 1, MPFR_RNDU);
            mpfr_mul(zz.raw(), zz.raw(), tol.raw(), MPFR_RNDU);
            if (mpfr_cmp(sz.raw(), zz.raw()) > 0) converged = false;
        }
    }
    if (!converged)
        throw std::runtime_error("unit_circle_deviation: iteration did not converge; increase digits");

    // Weierstrass corrections: every true root lies in some disk
    // D(z_i, 2 n |W_i|), W_i = p(z_i) / (lead prod_{j != i} (z_i - z_j))
    UnimodularReport rep;
    rep.degree = poly.degree();
    rep.deflated_degree = static_cast<long>(n);
    rep.deviation = BigFloat(64);
    mpfr_set_zero(rep.deviation.raw(), 1);
    for (size_t i = 0; i < n; ++i) {
        CF prod(p);
        mpfr_set_z(prod.re.raw(), work[n].get_mpz_t(), MPFR_RNDN);
        for (size_t j = 0; j < n; ++j)
            if (j != i) prod = cmul(prod, csub(z[i], z[j], p), p);
        CF wi = cdiv(poly_eval(work, z[i], p), prod, p);
        BigFloat r = cabs(wi, p);
        mpfr_mul_ui(r.raw(), r.raw(), 2 * static_cast<unsigned long>(n), MPFR_RNDU);
        RootBox box{BigFloat(p), BigFloat(p), BigFloat(64)};
        mpfr_set(box.re.raw(), z[i].re.raw(), MPFR_RNDN);
        mpfr_set(box.im.raw(), z[i].im.raw(), MPFR_RNDN);
        mpfr_set(box.radius.raw(), r.raw(), MPFR_RNDU);
        BigFloat dev = cabs(z[i], p);
        mpfr_sub_ui(dev.raw(), dev.raw(), 1, MPFR_RNDA);
        mpfr_abs(dev.raw(), dev.raw(), MPFR_RNDU);
        mpfr_add(dev.raw(), dev.raw(), box.radius.raw(), MPFR_RNDU);
        if (mpfr_cmp(dev.raw(), rep.deviation.raw()) > 0) {
            mpfr_set(rep.deviation.raw(), dev.raw(), MPFR_RNDU);
        }
        rep.roots.push_back(std::move(box));
    }
    rep.certified = self_inversive_check(poly) &&
                    mpfr_cmp(rep.deviation.raw(), pow10_neg_half(digits).raw()) < 0;
    return rep;
}

}  // namespace seczeta
