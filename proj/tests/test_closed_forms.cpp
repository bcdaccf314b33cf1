// Explicit evaluation families and the beta sequence, cross-checked against
// the orbit engine and the stated polynomial specializations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seczeta/closed_forms.hpp"
#include "seczeta/numbers.hpp"
#include "seczeta/reduction.hpp"

using namespace seczeta;

TEST_CASE("gen1 specializations at k = 2 and k = 4") {
    for (long j = -20; j <= 20; ++j) {
        if (j == 0) continue;
        ExactPsiValue v2 = psi_gen1(2, j);
        CHECK(v2.coefficient == Rational(3 * j + 1, 6));
        ExactPsiValue v4 = psi_gen1(4, j);
        Rational num(Int(Int(75) * j * j + Int(46) * j + 6));
        Rational den(Int(Int(8 * j + 3) * 180));
        CHECK(v4.coefficient == num / den);
    }
}

TEST_CASE("gen1 anchor values") {
    CHECK(psi_gen1(2, 1).coefficient == Rational(2, 3));
    CHECK(psi_gen1(2, 1).argument == QuadSurd::sqrt_of(Rational(6)));
    CHECK(psi_gen1(4, 1).coefficient == Rational(127, 1980));
    CHECK(psi_gen1(2, -1).coefficient == Rational(-1, 3));
    CHECK(psi_gen1(2, -1).argument == QuadSurd::sqrt_of(Rational(2)));
    CHECK_THROWS_AS(psi_gen1(3, 1), std::domain_error);
    CHECK_THROWS_AS(psi_gen1(2, 0), std::domain_error);
}

TEST_CASE("families agree with the orbit engine") {
    for (long j : {-3L, -2L, -1L, 1L, 2L, 3L}) {
        for (unsigned k : {2u, 4u, 6u}) {
            ExactPsiValue g1 = psi_gen1(k, j);
            CHECK(psi_exact(k, g1.argument).coeff == QuadSurd(g1.coefficient));
            ExactPsiValue g2 = psi_gen2(k, j);
            CHECK(psi_exact(k, g2.argument).coeff == QuadSurd(g2.coefficient));
        }
    }
}

TEST_CASE("gen2 arguments are shifted gen1 arguments") {
    for (long j : {1L, 2L, 5L, -1L, -4L}) {
        CHECK(psi_gen2(2, j).argument == psi_gen1(2, j).argument + 1);
    }
}

TEST_CASE("semiperiod family re-derives 1/6") {
    for (long j : {1L, 2L, 3L, 7L, -1L, -5L}) {
        ExactPsiValue v = psi2_semiperiod_family(j);
        CHECK(v.coefficient == Rational(1, 6));
        CHECK(psi_exact(2, v.argument).coeff == QuadSurd(Rational(1, 6)));
    }
}

TEST_CASE("pell family formula and engine agree") {
    struct Pair {
        long j, n;
    };
    Pair pairs[] = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, -3}, {2, -6}};
    for (const Pair& p : pairs) {
        ExactPsiValue v = psi2_pell_family(p.j, p.n);
        CHECK(v.coefficient == Rational(Int(p.n + 3 * p.j), Int(6) * Int(p.n)));
        CHECK(psi_exact(2, v.argument).coeff == QuadSurd(v.coefficient));
    }
    // n = -3j collapses the value to zero
    CHECK(psi2_pell_family(1, -3).coefficient == Rational(0));
    CHECK(psi2_pell_family(1, 1).argument == QuadSurd::sqrt_of(Rational(6)));
    CHECK(psi2_pell_family(-1, 1).argument == QuadSurd::sqrt_of(Rational(2)));
    CHECK_THROWS_AS(psi2_pell_family(1, 0), std::domain_error);
}

TEST_CASE("beta anchor values") {
    CHECK(beta(2) == Rational(-8, 3));
    CHECK(beta(4) == Rational(508, 5));
    CHECK(beta(6) == Rational(-64896, 7));
    CHECK(beta(20).den() == 385);
    CHECK_THROWS_AS(beta(3), std::domain_error);
}

TEST_CASE("denominator profile flags the anomalous primes") {
    DenominatorProfile p = denominator_profile(20);
    CHECK(p.beta_value.den() == 385);
    REQUIRE(p.anomalous_primes.size() == 1);
    CHECK(p.anomalous_primes[0] == 7);
    // 5 and 11 are von Staudt-Clausen primes for k = 20; both divide 385
    bool has5 = false, has11 = false;
    for (const Int& q : p.predicted_primes) {
        if (q == 5) has5 = true;
        if (q == 11) has11 = true;
    }
    CHECK(has5);
    CHECK(has11);

    // k = 2: denominator 3, nothing anomalous
    DenominatorProfile p2 = denominator_profile(2);
    CHECK(p2.beta_value.den() == 3);
    CHECK(p2.anomalous_primes.empty());
}

TEST_CASE("denominator factors multiply back to the denominator") {
    for (unsigned k = 2; k <= 32; k += 2) {
        DenominatorProfile p = denominator_profile(k);
        Int prod(1);
        for (const auto& [q, e] : p.denominator_factors) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
            prod *= pw;
        }
        CHECK(prod == p.beta_value.den());
    }
}
