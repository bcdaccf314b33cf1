#include "seczeta/numeric_eval.hpp"

#include "seczeta/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace seczeta {

std::optional<Rational> recognize_rational(const BigReal& x, const Int& max_denominator) {
    if (max_denominator < 1) throw std::domain_error("recognize_rational: need max_denominator >= 1");
    if (!mpfr_number_p(x.err()) || !mpfr_number_p(x.mid())) return std::nullopt;

    mpq_class eq;
    mpfr_get_q(eq.get_mpq_t(), x.err());
    Rational e(eq);
    // refusal gate: the bound must clear 1/q_max^2 with two digits to spare,
    // otherwise several fractions are compatible with the data
    Rational refuse(Int(1), Int(100 * max_denominator * max_denominator));
    if (!(e < refuse)) return std::nullopt;

    mpq_class mq;
    mpfr_get_q(mq.get_mpq_t(), x.mid());
    Rational m(mq);

    // walk the convergents of the midpoint; accept the first (smallest
    // denominator) one that matches to error-bound level
    Int hm2(0), km2(1), hm1(1), km1(0);
    Rational v = m;
    for (int iter = 0; iter < 10000; ++iter) {
        Int a = v.floor();
        Int h(a * hm1 + hm2), k(a * km1 + km2);
        if (k > max_denominator) break;
        Rational cand(h, k);
        Rational delta = (m - cand).abs();
        Rational margin(Int(1), Int(100000000) * k * k);
        if (delta < 4 * e + margin) return cand;
        Rational frac = v - Rational(a);
        if (frac.is_zero()) break;
        v = frac.inv();
        hm2 = hm1;
        km2 = km1;
        hm1 = h;
        km1 = k;
    }
    return std::nullopt;
}

namespace {

long isqrt_floor(long j) {
    long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(j))));
    while (r > 0 && r * r > j) --r;
    while ((r + 1) * (r + 1) <= j) ++r;
    return r;
}

mpfr_prec_t scan_prec(long digits) { return bits_for_digits(digits + 10) + 32; }

// psi_k(sqrt j)/pi^k at `dg` digits: square j reduce to the integer point
// sqrt j (Hurwitz route), nonsquare j go through the reduction engine
BigReal scan_value(unsigned k, long j, long dg) {
    mpfr_prec_t p = scan_prec(dg);
    long rt = isqrt_floor(j);
    if (rt * rt == j) {
        BigReal v = psi_rational_point(static_cast<long>(k), Int(rt), Int(1), dg);
        return v / BigReal::pi(p).pow_int(static_cast<long>(k));
    }
    ExactValue ev = psi_exact(k, QuadSurd::sqrt_of(Rational(j)));
    return BigReal::exact_surd(ev.coeff, p);
}

// Denominators on the small grid already reach ~1.4e9 (k=4, j=19), so the
// recognition cap sits at 1e10. At 60 working digits the accept margin is
// still ~1e-28, far below the ~1e-20 spacing of cap-bounded rationals, so a
// wrong recognition cannot slip through the recheck.
constexpr long kRecognitionCap = 10000000000L;

ScanRecord scan_cell(unsigned k, long j, long digits) {
    ScanRecord out{k, j, digits, std::nullopt, BigReal(64), false};
    BigReal x = scan_value(k, j, digits);
    auto rec = recognize_rational(x, Int(kRecognitionCap));
    if (!rec) {
        BigFloat inf(64);
        mpfr_set_inf(inf.raw(), 1);
        out.residual = BigReal::with_error(inf, BigFloat(64));
        return out;
    }
    out.residual = (x - BigReal::exact_rational(*rec, scan_prec(digits))).abs();
    if (!out.residual.certainly_below_pow10(digits / 2)) return out;
    // independent recomputation at higher precision must stay locked on
    BigReal x2 = scan_value(k, j, digits + 20);
    BigReal r2 = (x2 - BigReal::exact_rational(*rec, scan_prec(digits + 20))).abs();
    if (r2.certainly_below_pow10((digits + 20) / 2)) {
        out.recognized = rec;
        out.verified = true;
    }
    return out;
}

}  // namespace

std::vector<ScanRecord> conjecture1_scan(const std::vector<unsigned>& k_set,
                                         const std::vector<long>& j_set,
                                         long digits, unsigned jobs) {
    std::vector<unsigned> ks = k_set;
    std::vector<long> js = j_set;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());

    std::vector<std::pair<unsigned, long>> cells;
    for (unsigned k : ks)
        for (long j : js) cells.emplace_back(k, j);

    std::vector<ScanRecord> out(cells.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); ++i)
            out[i] = scan_cell(cells[i].first, cells[i].second, digits);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t]() {
            for (size_t i = t; i < cells.size(); i += jobs)
                out[i] = scan_cell(cells[i].first, cells[i].second, digits);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace seczeta
