#include "seczeta/diophantine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seczeta {

HalfIntegerGap nearest_half_integer_gap(const QuadSurd& z, const Int& n, long digits) {
    if (sgn(n) <= 0) throw std::domain_error("nearest_half_integer_gap: n must be positive");
    QuadSurd w = Rational(n) * z;
    Int k = w.floor_int();
    if (w.is_rational() && w.a() == Rational(k)) --k;  // nz integral: k and k+1 tie, take smaller
    QuadSurd g = w - QuadSurd(Rational(2 * k + 1, 2));
    if (g.sign() < 0) g = -g;
    if (g.sign() == 0) throw std::domain_error("nearest_half_integer_gap: nz is exactly half-integral");
    HalfIntegerGap out;
    out.k = k;
    out.gap_exact = g;
    out.gap = BigReal::exact_surd(g, bits_for_digits(digits));
    return out;
}

namespace {

// gap < scale*(log n)^2/n, decided by precision escalation. Both sides are
// positive and never equal (the threshold is transcendental for n >= 2), so
// the loop terminates.
bool below_log_threshold(const QuadSurd& gap, long n, const Rational& scale) {
    for (mpfr_prec_t p = 96; p <= 1 << 16; p *= 2) {
        BigReal g = BigReal::exact_surd(gap, p);
        BigReal thr = BigReal::exact_long(n, p).log();
        thr = thr * thr * BigReal::exact_rational(scale, p) / BigReal::exact_long(n, p);
        if (g.abs_upper().cmp(thr.abs_lower()) < 0) return true;
        if (g.abs_lower().cmp(thr.abs_upper()) > 0) return false;
    }
    throw std::runtime_error("hard_indices: gap/threshold comparison did not resolve");
}

}  // namespace

std::vector<long> hard_indices(const QuadSurd& z, long N, const Rational& scale) {
    if (N < 2) throw std::domain_error("hard_indices: N must be >= 2");
    if (scale.sign() <= 0) throw std::domain_error("hard_indices: scale must be positive");
    std::vector<long> out;
    for (long n = 2; n <= N; ++n) {
        HalfIntegerGap h = nearest_half_integer_gap(z, Int(n), 20);
        if (below_log_threshold(h.gap_exact, n, scale)) out.push_back(n);
    }
    return out;
}

std::vector<Rational> worley_candidates(const QuadSurd& z, size_t ell, const Rational& k) {
    if (k < Rational(1, 2)) throw std::domain_error("worley_candidates: k must be >= 1/2");
    CFrac cf = cfrac_of_surd(z);
    std::vector<Convergent> cv = convergents(cf, ell + 1);
    // p_{l-1}/q_{l-1} with the standard 1/0 seed at l = 0
    Int pl = cv[ell].p, ql = cv[ell].q;
    Int pm = ell == 0 ? Int(1) : cv[ell - 1].p;
    Int qm = ell == 0 ? Int(0) : cv[ell - 1].q;

    long bound = 0;  // largest integer with |a| < 2k
    {
        Rational two_k = 2 * k;
        Int f = two_k.num() / two_k.den();  // floor, positive
        if (Rational(f) == two_k) f -= 1;   // strict inequality
        bound = f.get_si();
    }
    std::set<std::pair<Int, Int>> seen;
    std::vector<Rational> out;
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            Int den = a * ql + b * qm;
            if (sgn(den) <= 0) continue;
            Int num = a * pl + b * pm;
            Rational f(num, den);
            if (seen.insert({f.num(), f.den()}).second) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigReal sec_magnitude_bound(const QuadSurd& z, const Int& n, long digits) {
    HalfIntegerGap h = nearest_half_integer_gap(z, n, digits);
    mpfr_prec_t p = bits_for_digits(digits);
    return BigReal::exact_long(1, p) / (BigReal::exact_long(2, p) * BigReal::exact_surd(h.gap_exact, p));
}

}  // namespace seczeta
