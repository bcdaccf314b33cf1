// Exact arithmetic layer: rationals, special number tables, quadratic surds,
// continued fractions, Pell solutions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seczeta/cfrac.hpp"
#include "seczeta/numbers.hpp"
#include "seczeta/quadsurd.hpp"
#include "seczeta/rational.hpp"

using namespace seczeta;

TEST_CASE("rational canonical form") {
    Rational r(Int(6), Int(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (unsigned m = 3; m <= 29; m += 2) CHECK(bernoulli(m).is_zero());
}

TEST_CASE("von Staudt-Clausen: B_k plus the predicted prime reciprocals is an integer") {
    for (unsigned k = 2; k <= 40; k += 2) {
        Rational s = bernoulli(k) + von_staudt_fraction(k);
        CHECK(s.den() == 1);
    }
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(10) == -50521);
    for (unsigned m = 1; m <= 21; m += 2) CHECK(euler_number(m) == 0);
}

TEST_CASE("binomial and chi4") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 7) == 0);
    CHECK(binomial(6, -1) == 0);
    int expect[] = {0, 1, 0, -1};
    for (long n = 0; n < 40; ++n) CHECK(chi4(Int(n)) == expect[n % 4]);
    CHECK(chi4(Int(-1)) == chi4(Int(3)));
}

TEST_CASE("zeta and beta constants as exact pi ratios") {
    CHECK(zeta_pi_ratio(2) == Rational(1, 6));
    CHECK(zeta_pi_ratio(4) == Rational(1, 90));
    CHECK(zeta_pi_ratio(6) == Rational(1, 945));
    CHECK(zeta_pi_ratio(8) == Rational(1, 9450));
    CHECK(beta_pi_ratio(1) == Rational(1, 4));
    CHECK(beta_pi_ratio(3) == Rational(1, 32));
    CHECK(beta_pi_ratio(5) == Rational(5, 1536));
}

TEST_CASE("factorize and squarefree split") {
    auto f = factorize(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, int>(Int(2), 3));
    CHECK(f[1] == std::pair<Int, int>(Int(3), 2));
    CHECK(f[2] == std::pair<Int, int>(Int(5), 1));
    for (long n = 1; n <= 400; ++n) {
        auto [s, d] = squarefree_split(Int(n));
        CHECK(s * s * d == n);
        for (const auto& [p, e] : factorize(d)) CHECK(e == 1);
    }
    CHECK(is_perfect_square(Int(49)));
    CHECK(!is_perfect_square(Int(48)));
}

TEST_CASE("surd normalization folds square parts") {
    QuadSurd z(Rational(0), Rational(1), Int(8));
    CHECK(z.b() == Rational(2));
    CHECK(z.d() == 2);
    QuadSurd w = QuadSurd::sqrt_of(Rational(9, 4));
    CHECK(w.is_rational());
    CHECK(w.a() == Rational(3, 2));
    QuadSurd v = QuadSurd::sqrt_of(Rational(10, 3));
    CHECK(v.d() == 30);
    CHECK(v.b() == Rational(1, 3));
    CHECK_THROWS_AS(QuadSurd::sqrt_of(Rational(-2)), std::domain_error);
}

TEST_CASE("surd field operations and exact sign") {
    QuadSurd r2 = QuadSurd::sqrt_of(Rational(2));
    QuadSurd x = (1 + r2) * (1 + r2);
    CHECK(x == QuadSurd(Rational(3), Rational(2), Int(2)));
    CHECK((x * x.inv()) == QuadSurd(1));
    CHECK(x.conj() == QuadSurd(Rational(3), Rational(-2), Int(2)));
    CHECK(x.norm() == Rational(1));
    // 7/5 < sqrt(2) < 3/2, both decided without floating point
    CHECK((r2 - QuadSurd(Rational(7, 5))).sign() > 0);
    CHECK((r2 - QuadSurd(Rational(3, 2))).sign() < 0);
    CHECK(r2.pow(10) == QuadSurd(32));
    CHECK(r2.pow(-2) == QuadSurd(Rational(1, 2)));
}

TEST_CASE("continued fractions of classic surds") {
    CFrac c2 = cfrac_of_surd(QuadSurd::sqrt_of(Rational(2)));
    CHECK(c2.a0 == 1);
    CHECK(c2.prefix.empty());
    REQUIRE(c2.period.size() == 1);
    CHECK(c2.period[0] == 2);

    CFrac c3 = cfrac_of_surd(QuadSurd::sqrt_of(Rational(3)));
    REQUIRE(c3.period.size() == 2);
    CHECK(c3.period[0] == 1);
    CHECK(c3.period[1] == 2);

    CFrac gold = cfrac_of_surd(QuadSurd(Rational(1, 2), Rational(1, 2), Int(5)));
    CHECK(gold.a0 == 1);
    REQUIRE(gold.period.size() == 1);
    CHECK(gold.period[0] == 1);

    CHECK_THROWS_AS(cfrac_of_surd(QuadSurd(Rational(3, 7))), std::domain_error);
}

TEST_CASE("sqrt(n^2+1) and sqrt(n^2+2) period patterns") {
    for (long n = 1; n <= 12; ++n) {
        CFrac a = cfrac_of_surd(QuadSurd::sqrt_of(Rational(Int(n * n + 1))));
        CHECK(a.a0 == n);
        REQUIRE(a.period.size() == 1);
        CHECK(a.period[0] == 2 * n);
        CFrac b = cfrac_of_surd(QuadSurd::sqrt_of(Rational(Int(n * n + 2))));
        REQUIRE(b.period.size() == 2);
        CHECK(b.period[0] == n);
        CHECK(b.period[1] == 2 * n);
    }
}

TEST_CASE("convergents satisfy the recurrence and unimodularity") {
    long surds[] = {2, 3, 5, 6, 7, 13, 19, 31};
    for (long d : surds) {
        QuadSurd z = QuadSurd::sqrt_of(Rational(Int(d)));
        CFrac cf = cfrac_of_surd(z);
        auto cs = convergents(cf, 25);
        REQUIRE(cs.size() == 25);
        for (size_t l = 2; l < cs.size(); ++l) {
            Int a = cf.quotient(l);
            CHECK(cs[l].p == a * cs[l - 1].p + cs[l - 2].p);
            CHECK(cs[l].q == a * cs[l - 1].q + cs[l - 2].q);
        }
        for (size_t l = 1; l < cs.size(); ++l) {
            Int det = cs[l].p * cs[l - 1].q - cs[l - 1].p * cs[l].q;
            CHECK((det == 1 || det == -1));
            CHECK(cs[l].q >= cs[l - 1].q);
            if (l >= 2) CHECK(cs[l].q > cs[l - 1].q);
        }
        // convergents alternate around z
        for (size_t l = 1; l < cs.size(); ++l) {
            int s1 = (z - QuadSurd(Rational(cs[l - 1].p, cs[l - 1].q))).sign();
            int s2 = (z - QuadSurd(Rational(cs[l].p, cs[l].q))).sign();
            CHECK(s1 * s2 == -1);
        }
    }
}

TEST_CASE("pell fundamental solutions") {
    auto [x2, y2] = pell_fundamental(Int(2));
    CHECK(x2 == 3);
    CHECK(y2 == 2);
    auto [x3, y3] = pell_fundamental(Int(3));
    CHECK(x3 == 2);
    CHECK(y3 == 1);
    auto [x5, y5] = pell_fundamental(Int(5));
    CHECK(x5 == 9);
    CHECK(y5 == 4);
    auto [x46, y46] = pell_fundamental(Int(46));
    CHECK(x46 == 24335);
    CHECK(y46 == 3588);
    CHECK_THROWS_AS(pell_fundamental(Int(9)), std::domain_error);
    CHECK_THROWS_AS(pell_fundamental(Int(1)), std::domain_error);
}

TEST_CASE("pell solution towers stay on the conic") {
    long js[] = {2, 3, 5, 6, 7, 8, 10, 11, 12, 13};
    for (long j : js) {
        auto sols = pell_solutions(Int(j), 6);
        REQUIRE(sols.size() == 6);
        for (size_t i = 0; i < sols.size(); ++i) {
            auto [x, y] = sols[i];
            CHECK(x * x - Int(j) * y * y == 1);
            if (i > 0) CHECK(x > sols[i - 1].first);
        }
    }
}
