#include "seczeta/closed_forms.hpp"

#include "seczeta/numbers.hpp"

#include <sstream>
#include <stdexcept>

namespace seczeta {

const char* family_name(Family f) {
    switch (f) {
        case Family::gen1: return "gen1";
        case Family::gen2: return "gen2";
        case Family::semiperiod: return "semiperiod";
        case Family::pell_family: return "pell_family";
        case Family::fixed_point: return "fixed_point";
    }
    return "?";
}

namespace {

// (i pi)^k / k! * sum_m (2^{m-1}-1) B_m E_{k-m} C(k,m) *
//   [(1+u)^{m-1} - (1-u)^{m-1}] / [(1+u)^{k-1} - (1-u)^{k-1}]
// as the rational pi^k coefficient; u is the family's surd ratio.
Rational surd_power_quotient_sum(unsigned k, const QuadSurd& u) {
    const QuadSurd one{Rational(1)};
    QuadSurd up = one + u;
    QuadSurd um = one - u;
    QuadSurd denom = up.pow(static_cast<long>(k) - 1) - um.pow(static_cast<long>(k) - 1);
    if (denom.sign() == 0) throw std::domain_error("degenerate surd-power denominator");

    QuadSurd acc{Rational(0)};
    for (unsigned m = 0; m <= k; ++m) {
        Int em = euler_number(k - m);
        if (em == 0) continue;
        Rational bm = bernoulli(m);
        if (bm.is_zero()) continue;
        Rational two_pow = m == 0 ? Rational(-1, 2) : Rational(Int(Int(1) << (m - 1))) - Rational(1);
        if (two_pow.is_zero()) continue;
        Rational coef = two_pow * bm * Rational(em) * Rational(binomial(k, static_cast<long>(m)));
        QuadSurd num = up.pow(static_cast<long>(m) - 1) - um.pow(static_cast<long>(m) - 1);
        acc = acc + coef * num;
    }
    acc = acc / denom;

    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    Rational pref(((k / 2) % 2 == 0) ? Int(1) : Int(-1), kfact);
    QuadSurd total = pref * acc;
    if (!total.is_rational())
        throw std::runtime_error("family value has a nonzero surd component");
    return total.a();
}

void require_even_k(unsigned k, const char* who) {
    if (k < 2 || k % 2 != 0)
        throw std::domain_error(std::string(who) + ": k must be even and >= 2");
}

}  // namespace

ExactPsiValue psi_gen1(unsigned k, long j) {
    require_even_k(k, "psi_gen1");
    if (j == 0) throw std::domain_error("psi_gen1: j must be nonzero");
    QuadSurd u = QuadSurd::sqrt_of(Rational(2 * j, 2 * j + 1));
    Rational c = surd_power_quotient_sum(k, u);
    QuadSurd arg = QuadSurd::sqrt_of(Rational(Int(Int(2 * j) * Int(2 * j + 1))));
    return ExactPsiValue{k, arg, c, Family::gen1};
}

ExactPsiValue psi_gen2(unsigned k, long j) {
    require_even_k(k, "psi_gen2");
    if (j == 0) throw std::domain_error("psi_gen2: j must be nonzero");
    QuadSurd u = QuadSurd::sqrt_of(Rational(2 * j + 1, 2 * j));
    Rational c = surd_power_quotient_sum(k, u);
    QuadSurd arg = QuadSurd(Rational(1)) + QuadSurd::sqrt_of(Rational(Int(Int(2 * j) * Int(2 * j + 1))));
    return ExactPsiValue{k, arg, c, Family::gen2};
}

ExactPsiValue psi2_semiperiod_family(long j) {
    if (j == 0) throw std::domain_error("psi2_semiperiod_family: j must be nonzero");
    // 2^{1-k} psi_k(2z) = psi_k(z) + psi_k(z+1) at k = 2, z = sqrt(2j(2j+1))
    Rational c = 2 * (psi_gen1(2, j).coefficient + psi_gen2(2, j).coefficient);
    if (c != Rational(1, 6))
        throw std::runtime_error("psi2_semiperiod_family: derived coefficient is not 1/6");
    QuadSurd arg = QuadSurd::sqrt_of(Rational(Int(Int(8 * j) * Int(2 * j + 1))));
    return ExactPsiValue{2, arg, c, Family::semiperiod};
}

ExactPsiValue psi2_pell_family(long j, long n) {
    if (n == 0) throw std::domain_error("psi2_pell_family: n must be nonzero");
    Rational rad(Int(2 * j) * (Int(2 * j) * n + 1), Int(n));
    if (rad.sign() <= 0)
        throw std::domain_error("psi2_pell_family: argument radicand must be positive");
    if (is_perfect_square(rad.num()) && is_perfect_square(rad.den()))
        throw std::domain_error("psi2_pell_family: argument is rational");
    Rational c(Int(n) + Int(3 * j), Int(6) * Int(n));
    return ExactPsiValue{2, QuadSurd::sqrt_of(rad), c, Family::pell_family};
}

Rational beta(unsigned k) {
    require_even_k(k, "beta");
    QuadSurd r6 = QuadSurd::sqrt_of(Rational(6));
    QuadSurd sp = QuadSurd(Rational(3)) + r6;
    QuadSurd sm = QuadSurd(Rational(3)) - r6;

    QuadSurd acc{Rational(0)};
    for (unsigned m = 0; m <= k; ++m) {
        Int em = euler_number(k - m);
        if (em == 0) continue;
        Rational bm = bernoulli(m);
        if (bm.is_zero()) continue;
        Rational two_pow = m == 0 ? Rational(-1, 2) : Rational(Int(Int(1) << (m - 1))) - Rational(1);
        if (two_pow.is_zero()) continue;
        Rational coef = two_pow * bm * Rational(em) * Rational(binomial(k, static_cast<long>(m)));
        Int three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, k - m);
        QuadSurd diff = sp.pow(static_cast<long>(m) - 1) - sm.pow(static_cast<long>(m) - 1);
        acc = acc + (coef * Rational(three_pow)) * diff;
    }
    QuadSurd total = acc / r6;
    if (!total.is_rational()) throw std::runtime_error("beta: value has a nonzero surd component");
    return total.a();
}

DenominatorProfile denominator_profile(unsigned k) {
    require_even_k(k, "denominator_profile");
    DenominatorProfile out;
    out.k = k;
    out.beta_value = beta(k);
    out.denominator_factors = factorize(out.beta_value.den());
    for (Int p = 2; p <= Int(k) + 1; ++p) {
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) continue;
        Int km;
        mpz_mod(km.get_mpz_t(), Int(k).get_mpz_t(), Int(p - 1).get_mpz_t());
        if (km == 0) out.predicted_primes.push_back(p);
    }
    for (const auto& [p, e] : out.denominator_factors) {
        Int km;
        mpz_mod(km.get_mpz_t(), Int(k).get_mpz_t(), Int(p - 1).get_mpz_t());
        if (km != 0) out.anomalous_primes.push_back(p);
    }
    return out;
}

std::string DenominatorProfile::str() const {
    std::ostringstream os;
    os << "beta_" << k << " = " << beta_value.str() << "; denominator = ";
    if (denominator_factors.empty()) {
        os << "1";
    } else {
        for (size_t i = 0; i < denominator_factors.size(); ++i) {
            if (i) os << " * ";
            os << denominator_factors[i].first;
            if (denominator_factors[i].second > 1) os << "^" << denominator_factors[i].second;
        }
    }
    os << "; predicted primes {";
    for (size_t i = 0; i < predicted_primes.size(); ++i) {
        if (i) os << ", ";
        os << predicted_primes[i];
    }
    os << "}; anomalous {";
    for (size_t i = 0; i < anomalous_primes.size(); ++i) {
        if (i) os << ", ";
        os << anomalous_primes[i];
    }
    os << "}";
    return os.str();
}

}  // namespace seczeta
