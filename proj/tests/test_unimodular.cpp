// Self-inversive polynomial family and the unit circle root certification.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seczeta/unimodular.hpp"

#include <cmath>

using namespace seczeta;

TEST_CASE("make_int_polynomial clears denominators to a primitive form") {
    IntPolynomial p = make_int_polynomial({Rational(1, 2), Rational(3, 4)});
    REQUIRE(p.coeff.size() == 2);
    CHECK(p.coeff[0] == 2);
    CHECK(p.coeff[1] == 3);
    CHECK(p.scale == 4);
    CHECK(p.content == 1);

    IntPolynomial q = make_int_polynomial({Rational(6), Rational(0), Rational(9)});
    CHECK(q.coeff[0] == 2);
    CHECK(q.coeff[1] == 0);
    CHECK(q.coeff[2] == 3);
    CHECK(q.content == 3);

    // trailing zero coefficients are trimmed off the high end
    IntPolynomial r = make_int_polynomial({Rational(5), Rational(1), Rational(0)});
    CHECK(r.degree() == 1);

    CHECK_THROWS_AS(make_int_polynomial({Rational(0), Rational(0)}), std::domain_error);
}

TEST_CASE("conj_poly anchors at k = 2 and k = 4") {
    IntPolynomial p2 = conj_poly(2);
    REQUIRE(p2.degree() == 3);
    CHECK(p2.coeff[0] == -3);
    CHECK(p2.coeff[1] == 1);
    CHECK(p2.coeff[2] == -1);
    CHECK(p2.coeff[3] == 3);
    CHECK(p2.str() == "3x^3 - x^2 + x - 3");

    IntPolynomial p4 = conj_poly(4);
    REQUIRE(p4.degree() == 5);
    CHECK(p4.coeff[0] == 75);
    CHECK(p4.coeff[1] == -7);
    CHECK(p4.coeff[2] == 30);
    CHECK(p4.coeff[3] == -30);
    CHECK(p4.coeff[4] == 7);
    CHECK(p4.coeff[5] == -75);

    CHECK_THROWS_AS(conj_poly(3), std::domain_error);
    CHECK_THROWS_AS(conj_poly(0), std::domain_error);
}

TEST_CASE("conj_poly degree and self-inversive symmetry across the family") {
    for (unsigned k = 2; k <= 40; k += 2) {
        IntPolynomial p = conj_poly(k);
        CHECK(p.degree() == static_cast<long>(k) + 1);
        CHECK(self_inversive_check(p));
        // anti-palindromic here: c_i = -c_{n-i}
        long n = p.degree();
        for (long i = 0; i <= n; ++i)
            CHECK(p.coeff[static_cast<size_t>(i)] ==
                  -p.coeff[static_cast<size_t>(n - i)]);
    }
}

TEST_CASE("self_inversive_check rejects asymmetric polynomials") {
    CHECK(!self_inversive_check(make_int_polynomial({Rational(-2), Rational(1)})));
    CHECK(self_inversive_check(make_int_polynomial({Rational(1), Rational(2), Rational(1)})));
    CHECK(self_inversive_check(make_int_polynomial({Rational(-1), Rational(0), Rational(1)})));
    // a root at zero is stripped before the symmetry test
    CHECK(self_inversive_check(make_int_polynomial(
        {Rational(0), Rational(1), Rational(2), Rational(1)})));
}

TEST_CASE("unit circle certification on the small family members") {
    for (unsigned k : {2u, 4u, 6u, 8u, 10u, 12u}) {
        IntPolynomial p = conj_poly(k);
        UnimodularReport rep = unit_circle_deviation(p, 50);
        CHECK(rep.certified);
        CHECK(rep.deviation.to_double() < 1e-25);
        CHECK(rep.degree == static_cast<long>(k) + 1);
        CHECK(rep.deflated_degree <= rep.degree);
        CHECK(static_cast<long>(rep.roots.size()) == rep.deflated_degree);
        for (const RootBox& b : rep.roots) {
            double m = std::hypot(b.re.to_double(), b.im.to_double());
            CHECK(std::abs(m - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("roots off the unit circle are not certified") {
    // x - 2 has its only root at 2
    UnimodularReport rep = unit_circle_deviation(
        make_int_polynomial({Rational(-2), Rational(1)}), 40);
    CHECK(!rep.certified);
    CHECK(rep.deviation.to_double() > 0.5);

    // 2x^2 - 5x + 2 = (2x - 1)(x - 2): self-inversive but roots at 1/2 and 2
    UnimodularReport sym = unit_circle_deviation(
        make_int_polynomial({Rational(2), Rational(-5), Rational(2)}), 40);
    CHECK(!sym.certified);
    CHECK(sym.deviation.to_double() > 0.4);
}

TEST_CASE("repeated roots are deflated before iteration") {
    // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
    UnimodularReport rep = unit_circle_deviation(
        make_int_polynomial({Rational(1), Rational(-1), Rational(-1), Rational(1)}), 40);
    CHECK(rep.degree == 3);
    CHECK(rep.deflated_degree == 2);
    CHECK(rep.roots.size() == 2);
    CHECK(rep.deviation.to_double() < 1e-15);
}

TEST_CASE("root boxes of conj_poly(6) close under conjugation") {
    UnimodularReport rep = unit_circle_deviation(conj_poly(6), 50);
    for (const RootBox& b : rep.roots) {
        if (std::abs(b.im.to_double()) < 1e-20) continue;
        bool found = false;
        for (const RootBox& c : rep.roots) {
            if (std::abs(b.re.to_double() - c.re.to_double()) < 1e-12 &&
                std::abs(b.im.to_double() + c.im.to_double()) < 1e-12)
                found = true;
        }
        CHECK(found);
    }
}
