#include "seczeta/numeric_eval.hpp"

#include "seczeta/cfrac.hpp"
#include "seczeta/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace seczeta {

namespace {

constexpr long kGuardDigits = 10;
constexpr long kTermCap = 1L << 26;

mpfr_prec_t working_prec(long digits) { return bits_for_digits(digits + kGuardDigits) + 32; }

// 10^-digits rounded down (safe comparison target)
BigFloat pow10_neg(long digits) {
    BigFloat t(64);
    mpfr_ui_pow_ui(t.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDU);
    mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDD);
    return t;
}

// ---------------------------------------------------------------------------
// exact angle ladders
//
// Trig arguments are multiples pi * n * step. The fractional part of n*step
// is tracked exactly in the quadratic field and reduced mod `modulus` (2 for
// sec/csc, 1 for tan/cot), so the MPFR trig call always sees a small,
// well-conditioned angle no matter how large n gets.

void mod_step(QuadSurd& r, const QuadSurd& step, long modulus) {
    r = r + step;
    Int f = r.floor_int();
    Int q;
    mpz_fdiv_q_ui(q.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(modulus));
    if (q != 0) r = r - QuadSurd(Rational(Int(q * modulus)));
}

enum class Trig { Sec, Csc, Tan, Cot };

long trig_modulus(Trig t) { return (t == Trig::Sec || t == Trig::Csc) ? 2 : 1; }

// value of the trig function at angle pi*r, escalating precision when the
// denominator (cos or sin) is small. r is exact, so a doubling of precision
// resolves any gap down to ~2^-2p; below that we give up loudly.
BigReal trig_term(Trig t, const QuadSurd& r, mpfr_prec_t p) {
    bool inv_cos = (t == Trig::Sec || t == Trig::Tan);
    for (int attempt = 0; attempt < 2; ++attempt) {
        mpfr_prec_t pp = attempt == 0 ? p : 2 * p;
        BigReal ang = BigReal::exact_surd(r, pp) * BigReal::pi(pp);
        BigReal den = inv_cos ? ang.cos() : ang.sin();
        BigFloat small = BigFloat::from_double(1e-6, 64);
        if (attempt == 0 && den.abs_lower() < small) continue;
        if (!(den.abs_lower() > BigFloat(64))) break;  // interval touches zero
        switch (t) {
            case Trig::Sec: return BigReal::exact_long(1, pp) / den;
            case Trig::Csc: return BigReal::exact_long(1, pp) / den;
            case Trig::Tan: return ang.sin() / den;
            case Trig::Cot: return ang.cos() / den;
        }
    }
    throw std::runtime_error("trig_term: angle gap unresolvable at doubled precision");
}

// n^-s at precision p
BigReal inv_pow(long n, double s, mpfr_prec_t p) {
    double si = std::floor(s);
    if (si == s && std::fabs(s) < 1e15)
        return BigReal::exact_long(n, p).pow_int(-static_cast<long>(si));
    BigReal ms = BigReal::with_error(BigFloat::from_double(-s, p), BigFloat(64));
    return (ms * BigReal::exact_long(n, p).log()).exp();
}

// largest partial quotient of the continued fraction of w (prefix+period;
// a0 does not enter the approximation bound)
Int max_quotient(const QuadSurd& w) {
    CFrac cf = cfrac_of_surd(w);
    Int m = 1;
    for (const Int& a : cf.prefix)
        if (a > m) m = a;
    for (const Int& a : cf.period)
        if (a > m) m = a;
    return m;
}

// Per-term slope: |term_n| <= slope * n, from the badly-approximable floor
// dist(m w, Z) > 1/((a_max+2) m). For sec/tan the relevant distances are to
// half-integers, i.e. integer distances of 2z; for cot/csc, of z itself.
Rational term_slope(Trig t, const QuadSurd& z) {
    bool half = (t == Trig::Sec || t == Trig::Tan);
    Int amax = max_quotient(half ? (2 * z) : z);
    return half ? Rational(Int(2 * (amax + 2))) : Rational(Int(amax + 2), Int(2));
}

// upper bound for sum_{n>N} slope * n^{1-s}  (s > 2): slope * N^{2-s}/(s-2)
BigFloat tail_bound(const Rational& slope, double s, long n_done) {
    BigFloat t(64);
    if (s <= 2.0) {
        mpfr_set_inf(t.raw(), 1);
        return t;
    }
    mpfr_set_d(t.raw(), 2.0 - s, MPFR_RNDU);
    BigFloat nn = BigFloat::from_long(n_done, 64);
    mpfr_pow(t.raw(), nn.raw(), t.raw(), MPFR_RNDU);
    BigFloat c = BigFloat::from_rational(slope, 64, MPFR_RNDU);
    mpfr_mul(t.raw(), t.raw(), c.raw(), MPFR_RNDU);
    BigFloat sm2 = BigFloat::from_double(s - 2.0, 64);
    mpfr_div(t.raw(), t.raw(), sm2.raw(), MPFR_RNDU);
    return t;
}

bool below(mpfr_srcptr a, const BigFloat& b) { return mpfr_cmp(a, b.raw()) < 0; }

// Adaptive truncation of sum trig(pi n z)/n^s with a rigorous tail. The
// required N is projected from the first chunk (the bound scales exactly as
// N^{2-s}); a target beyond the term cap is not chased, the 2000-term best
// effort with its honest bound is returned instead.
BigReal adaptive_sum(Trig kind, const QuadSurd& z, double s, long digits) {
    if (z.is_rational()) throw std::domain_error("direct series: argument must be irrational");
    if (s < 2.0) throw std::domain_error("direct series: need s >= 2");
    mpfr_prec_t p = working_prec(digits);
    long modulus = trig_modulus(kind);
    Rational slope = term_slope(kind, z);
    BigFloat target = pow10_neg(digits);

    BigReal sum(p);
    QuadSurd r;
    long n = 0;
    auto run_to = [&](long stop) {
        for (; n < stop; ++n) {
            mod_step(r, z, modulus);
            sum += trig_term(kind, r, p) * inv_pow(n + 1, s, p);
        }
    };

    run_to(2000);
    BigFloat tail = tail_bound(slope, s, n);
    if (s > 2.0 && !(below(tail.raw(), target))) {
        // solve slope*N^{2-s}/(s-2) = target/4 for N, in doubles via logs
        double lt = std::log2(tail.to_double()) - std::log2(target.to_double() / 4);
        double extra = lt / (s - 2.0);
        if (extra > 0 && extra < 26.0 - std::log2(2000.0)) {
            long need = static_cast<long>(std::ceil(2000.0 * std::pow(2.0, extra)));
            run_to(std::min(need, kTermCap));
            tail = tail_bound(slope, s, n);
            if (!below(tail.raw(), target) && 2 * n <= kTermCap) {
                run_to(2 * n);
                tail = tail_bound(slope, s, n);
            }
        }
    }
    BigFloat zero(p);
    return sum + BigReal::with_error(zero, tail);
}

}  // namespace

bool meets_digits(const BigReal& value, long digits) {
    if (!mpfr_number_p(value.err())) return false;
    BigFloat thr(64);
    mpfr_abs(thr.raw(), value.mid(), MPFR_RNDD);
    mpfr_add_ui(thr.raw(), thr.raw(), 1, MPFR_RNDD);
    BigFloat scale = pow10_neg(digits);
    mpfr_mul(thr.raw(), thr.raw(), scale.raw(), MPFR_RNDD);
    return mpfr_cmp(value.err(), thr.raw()) < 0;
}

BigReal render_exact(const ExactValue& v, long digits) {
    mpfr_prec_t p = working_prec(digits);
    return BigReal::exact_surd(v.coeff, p) * BigReal::pi(p).pow_int(static_cast<long>(v.s));
}

// ---------------------------------------------------------------------------
// Hurwitz zeta by Euler-Maclaurin:
//   zeta(s,a) = sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//             + sum_{j=1}^{K} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1} + R
// with |R| <= (s)_{2K+1} * 4/(2pi)^{2K+1} * (N+a)^{-s-2K}/(s+2K), valid for
// real s > 0 (periodic Bernoulli bound |~B_m| <= 4 m!/(2pi)^m).

namespace {

// remainder bound above, rounded up
BigFloat em_remainder(double s, const Rational& a, long n_terms, long order_k) {
    BigFloat r(64);
    mpfr_const_pi(r.raw(), MPFR_RNDU);
    mpfr_mul_ui(r.raw(), r.raw(), 2, MPFR_RNDU);
    mpfr_pow_ui(r.raw(), r.raw(), static_cast<unsigned long>(2 * order_k + 1), MPFR_RNDD);
    mpfr_ui_div(r.raw(), 4, r.raw(), MPFR_RNDU);
    BigFloat poch = BigFloat::from_double(1.0, 64);
    for (long i = 0; i <= 2 * order_k; ++i) {
        BigFloat f = BigFloat::from_double(s + static_cast<double>(i), 64);
        mpfr_mul(poch.raw(), poch.raw(), f.raw(), MPFR_RNDU);
    }
    mpfr_mul(r.raw(), r.raw(), poch.raw(), MPFR_RNDU);
    BigFloat base = BigFloat::from_rational(a + Rational(static_cast<long>(n_terms)), 64, MPFR_RNDD);
    BigFloat ex = BigFloat::from_double(-s - 2.0 * static_cast<double>(order_k), 64);
    mpfr_pow(base.raw(), base.raw(), ex.raw(), MPFR_RNDU);
    mpfr_mul(r.raw(), r.raw(), base.raw(), MPFR_RNDU);
    BigFloat den = BigFloat::from_double(s + 2.0 * static_cast<double>(order_k), 64);
    mpfr_nextbelow(den.raw());  // keep the quotient an upper bound
    mpfr_div(r.raw(), r.raw(), den.raw(), MPFR_RNDU);
    return r;
}

// x^e for real e, x a positive exact rational rendered at p
BigReal real_pow(const BigReal& x, double e, mpfr_prec_t p) {
    double ei = std::floor(e);
    if (ei == e && std::fabs(e) < 1e15) return x.pow_int(static_cast<long>(ei));
    BigReal eb = BigReal::with_error(BigFloat::from_double(e, p), BigFloat(64));
    return (eb * x.log()).exp();
}

}  // namespace

BigReal hurwitz_zeta(double s, const Rational& a, long digits) {
    if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: need s > 1");
    if (a.sign() <= 0 || a > Rational(1)) throw std::domain_error("hurwitz_zeta: need a in (0, 1]");
    mpfr_prec_t p = working_prec(digits);
    long K = 5 + static_cast<long>(0.36 * static_cast<double>(digits + kGuardDigits));
    long N = 3 * K;
    BigFloat target = pow10_neg(digits + 5);
    while (!below(em_remainder(s, a, N, K).raw(), target) && N < (1L << 24)) N *= 2;

    BigReal sum(p);
    for (long m = 0; m < N; ++m)
        sum += real_pow(BigReal::exact_rational(a + Rational(m), p), -s, p);

    BigReal base = BigReal::exact_rational(a + Rational(N), p);
    sum += real_pow(base, 1.0 - s, p) / BigReal::with_error(BigFloat::from_double(s - 1.0, p), BigFloat(64));
    BigReal binv = BigReal::exact_long(1, p) / base;
    BigReal w = real_pow(base, -s, p);
    sum += w * BigReal::exact_rational(Rational(1, 2), p);

    // poch = s(s+1)...(s+2j-2), w = (N+a)^{-s-2j+1}, advanced incrementally
    BigReal poch = BigReal::with_error(BigFloat::from_double(s, p), BigFloat(64));
    w = w * binv;
    Int fact(2);
    for (long j = 1; j <= K; ++j) {
        Rational bf = bernoulli(static_cast<unsigned>(2 * j)) / Rational(fact);
        sum += BigReal::exact_rational(bf, p) * poch * w;
        if (j < K) {
            double s0 = s + static_cast<double>(2 * j - 1);
            poch = poch * BigReal::with_error(BigFloat::from_double(s0, p), BigFloat(64)) *
                   BigReal::with_error(BigFloat::from_double(s0 + 1.0, p), BigFloat(64));
            w = w * binv * binv;
            fact *= (2 * j + 1);
            fact *= (2 * j + 2);
        }
    }
    BigFloat zero(p);
    return sum + BigReal::with_error(zero, em_remainder(s, a, N, K));
}

BigReal psi_numeric(double s, const QuadSurd& z, long digits) {
    if (z.is_rational())
        throw std::domain_error("psi_numeric: rational argument, use psi_rational_point");
    if (s < 2.0) throw std::domain_error("psi_numeric: need s >= 2");
    double si = std::floor(s);
    if (si == s && static_cast<long>(si) % 2 == 0)
        return render_exact(psi_exact(static_cast<unsigned>(si), z), digits);
    return psi_direct(s, z, digits);
}

BigReal psi_direct(double s, const QuadSurd& z, long digits) {
    return adaptive_sum(Trig::Sec, z, s, digits);
}

BigReal psi_rational_point(long s, const Int& p, const Int& q, long digits) {
    if (q <= 0) throw std::domain_error("psi_rational_point: need q > 0");
    if (mpz_even_p(q.get_mpz_t()))
        throw std::domain_error("psi_rational_point: even denominator, sec has a pole on the orbit");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::domain_error("psi_rational_point: p/q not in lowest terms");
    if (s < 2) throw std::domain_error("psi_rational_point: need s >= 2");

    mpfr_prec_t pr = working_prec(digits);
    BigReal pi_b = BigReal::pi(pr);
    long qs = mpz_get_si(q.get_mpz_t());
    BigReal sum(pr);
    for (long a = 1; a <= 2 * qs; ++a) {
        // sec(pi a p / q): reduce the angle mod 2 exactly; q odd keeps it
        // away from half-integers by at least 1/(2q)
        Rational t(Int(a * p), q);
        Int fl = t.floor();
        mpz_fdiv_q_ui(fl.get_mpz_t(), fl.get_mpz_t(), 2);
        t = t - Rational(Int(2 * fl));
        BigReal c = (BigReal::exact_rational(t, pr) * pi_b).cos();
        BigReal h = hurwitz_zeta(static_cast<double>(s), Rational(Int(a), Int(2 * q)), digits + 8);
        sum += h / c;
    }
    Int den = 2 * q;
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(s));
    return sum * BigReal::exact_rational(Rational(Int(1), den), pr);
}

BigReal cotangent_zeta(long s, const QuadSurd& z, long digits) {
    return render_exact(xi_exact(static_cast<unsigned>(s), z), digits);
}

BigReal xi_direct(long s, const QuadSurd& z, long digits) {
    if (s < 3 || s % 2 == 0) throw std::domain_error("xi_direct: need odd s >= 3");
    return adaptive_sum(Trig::Cot, z, static_cast<double>(s), digits);
}

// ---------------------------------------------------------------------------
// tangent / cosecant series through the cotangent identities
//   sum tan(pi n z)/n^s = xi_s(z) - 2 xi_s(2z)
//   sum csc(pi n z)/n^s = xi_s(z/2) - xi_s(z)
// Each is also summed directly; the two paths must agree. The pointwise
// identities tan x = cot x - 2 cot 2x and csc x = cot(x/2) - cot x make the
// truncations at equal N match to rounding level, which is checked hard; the
// exact value must then sit inside the direct sum's tail bound.

namespace {

constexpr long kCrossCheckTerms = 20000;

BigReal identity_checked(Trig kind, long s, const QuadSurd& z, long digits) {
    if (s < 3 || s % 2 == 0) throw std::domain_error("need odd s >= 3");
    if (z.is_rational()) throw std::domain_error("need irrational argument");
    ExactValue e1 = kind == Trig::Tan ? xi_exact(static_cast<unsigned>(s), z)
                                      : xi_exact(static_cast<unsigned>(s), z / QuadSurd(Rational(2)));
    ExactValue e2 = kind == Trig::Tan ? xi_exact(static_cast<unsigned>(s), 2 * z)
                                      : xi_exact(static_cast<unsigned>(s), z);
    QuadSurd coeff = kind == Trig::Tan ? e1.coeff - Rational(2) * e2.coeff : e1.coeff - e2.coeff;
    BigReal value = render_exact(ExactValue{coeff, static_cast<unsigned>(s), 0}, digits);

    mpfr_prec_t p = working_prec(digits);
    long modulus = trig_modulus(kind);
    QuadSurd zc1 = kind == Trig::Tan ? z : z / QuadSurd(Rational(2));
    QuadSurd zc2 = kind == Trig::Tan ? 2 * z : z;
    QuadSurd r, r1, r2;
    BigReal direct(p), combo(p);
    for (long n = 1; n <= kCrossCheckTerms; ++n) {
        mod_step(r, z, modulus);
        mod_step(r1, zc1, 1);
        mod_step(r2, zc2, 1);
        BigReal np = inv_pow(n, static_cast<double>(s), p);
        direct += trig_term(kind, r, p) * np;
        BigReal c = trig_term(Trig::Cot, r1, p) - (kind == Trig::Tan ? BigReal::exact_long(2, p) : BigReal::exact_long(1, p)) * trig_term(Trig::Cot, r2, p);
        combo += c * np;
    }
    // matched truncations differ by rounding only
    BigReal gap = (direct - combo).abs();
    BigFloat budget(64);
    mpfr_add(budget.raw(), direct.err(), combo.err(), MPFR_RNDU);
    mpfr_mul_ui(budget.raw(), budget.raw(), 4, MPFR_RNDU);
    if (mpfr_cmp(gap.mid(), budget.raw()) > 0)
        throw std::logic_error("series identity check failed at matched truncation");
    // exact value must sit inside the direct sum's truncation window
    Rational slope = term_slope(kind, z);
    BigFloat tail = tail_bound(slope, static_cast<double>(s), kCrossCheckTerms);
    BigReal diff = (direct - value).abs();
    BigFloat allow(64);
    mpfr_add(allow.raw(), diff.err(), tail.raw(), MPFR_RNDU);
    BigFloat mid_abs(64);
    mpfr_abs(mid_abs.raw(), diff.mid(), MPFR_RNDD);
    if (mpfr_cmp(mid_abs.raw(), allow.raw()) > 0)
        throw std::logic_error("series identity disagrees with direct sum beyond tail bound");
    return value;
}

}  // namespace

BigReal tangent_series(long s, const QuadSurd& z, long digits) {
    return identity_checked(Trig::Tan, s, z, digits);
}

BigReal cosecant_series(long s, const QuadSurd& z, long digits) {
    return identity_checked(Trig::Csc, s, z, digits);
}

// ---------------------------------------------------------------------------
// partial fraction identity residual

BigReal lemma_residual(const Rational& x, const QuadSurd& z, long n_terms, long digits) {
    if (z.is_rational() || z.sign() <= 0)
        throw std::domain_error("lemma_residual: need positive irrational z");
    if (x.is_zero()) throw std::domain_error("lemma_residual: 1/(zx) pole at x = 0");
    if (x.den() == 2)
        throw std::domain_error("lemma_residual: sec(pi x) pole, x is a half-integer");
    // the csc sum runs over odd n only (chi4 kills even n), so n^2 = 4x^2
    // would need an odd n = 2|x|: impossible once half-integers are excluded.
    QuadSurd zx = QuadSurd(x) * z;
    QuadSurd zx2 = zx * zx;
    if (zx2.is_rational()) {
        Rational v = zx2.a();
        if (v.is_integer() && is_perfect_square(v.num())) {
            Int root;
            mpz_sqrt(root.get_mpz_t(), v.num().get_mpz_t());
            if (root <= n_terms && root >= 1) {
                throw std::domain_error("lemma_residual: sec series denominator vanishes at n = " + root.get_str());
            }
        }
    }

    mpfr_prec_t p = working_prec(digits);
    BigReal pi_b = BigReal::pi(p);

    QuadSurd rzx = zx;
    mod_step(rzx, QuadSurd(Rational(0)), 2);  // reduce zx itself mod 2
    BigReal lhs = pi_b * trig_term(Trig::Csc, rzx, p);
    Rational xr = x;
    {
        Int fl = xr.floor();
        mpz_fdiv_q_ui(fl.get_mpz_t(), fl.get_mpz_t(), 2);
        xr = xr - Rational(Int(2 * fl));
    }
    lhs = lhs * trig_term(Trig::Sec, QuadSurd(xr), p);

    BigReal rhs = BigReal::exact_surd(zx.inv(), p);
    // 8x sum_{n odd} chi4(n) csc(pi n z/2)/(n^2 - 4x^2)
    QuadSurd half_z = z / QuadSurd(Rational(2));
    QuadSurd r1;
    BigReal acc1(p);
    Rational fourx2 = Rational(4) * x * x;
    for (long n = 1; n <= n_terms; ++n) {
        mod_step(r1, half_z, 2);
        int chi = chi4(Int(n));
        if (chi == 0) continue;
        BigReal term = trig_term(Trig::Csc, r1, p) /
                       BigReal::exact_rational(Rational(Int(Int(n) * Int(n))) - fourx2, p);
        acc1 += chi > 0 ? term : -term;
    }
    rhs += BigReal::exact_rational(Rational(8) * x, p) * acc1;
    // -2zx sum_n sec(pi n (1 + 1/z))/(n^2 - z^2 x^2)
    QuadSurd w2 = 1 + z.inv();
    QuadSurd r2;
    BigReal acc2(p);
    for (long n = 1; n <= n_terms; ++n) {
        mod_step(r2, w2, 2);
        QuadSurd den = QuadSurd(Rational(Int(Int(n) * Int(n)))) - zx2;
        acc2 += trig_term(Trig::Sec, r2, p) / BigReal::exact_surd(den, p);
    }
    rhs -= BigReal::exact_long(2, p) * BigReal::exact_surd(zx, p) * acc2;

    return (lhs - rhs).abs();
}

BigReal partial_fraction_secant(const Rational& x, long n_terms, long digits) {
    if (x.den() == 2)
        throw std::domain_error("partial_fraction_secant: x is a half-integer");
    mpfr_prec_t p = working_prec(digits);
    Rational fourx2 = Rational(4) * x * x;
    BigReal acc(p);
    for (long n = 1; n <= n_terms; n += 2) {
        Rational den = Rational(Int(n)) * (Rational(Int(Int(n) * Int(n))) - fourx2);
        BigReal term = BigReal::exact_rational(Rational(1) / den, p);
        acc += (n % 4 == 1) ? term : -term;
    }
    return BigReal::exact_rational(Rational(16) * x * x, p) * acc;
}

BigReal partial_fraction_cosecant(const Rational& x, long n_terms, long digits) {
    if (x.is_integer())
        throw std::domain_error("partial_fraction_cosecant: x is an integer");
    mpfr_prec_t p = working_prec(digits);
    Rational x2 = x * x;
    BigReal acc(p);
    for (long k = 1; k <= n_terms; ++k) {
        BigReal term = BigReal::exact_rational(Rational(1) / (Rational(Int(Int(k) * Int(k))) - x2), p);
        acc += (k % 2 == 1) ? term : -term;
    }
    return BigReal::exact_rational(Rational(2) * x, p) * acc;
}

SeriesAudit series_audit(double s, const QuadSurd& z, bool cotangent,
                         const std::vector<long>& cutoffs) {
    if (z.is_rational())
        throw std::domain_error("series_audit: need an irrational argument");
    SeriesAudit out;
    Trig t = cotangent ? Trig::Cot : Trig::Sec;
    out.a_max = max_quotient(cotangent ? z : (2 * z));
    out.slope = term_slope(t, z);
    for (long n : cutoffs) {
        if (n < 1) throw std::domain_error("series_audit: cutoffs must be >= 1");
        out.tails.emplace_back(n, tail_bound(out.slope, s, n));
    }
    return out;
}

}  // namespace seczeta
