// Integer polynomial family attached to the even functional equations and the
// machinery to verify, numerically, that all of its roots sit on the unit
// circle: exact construction, self-inversive test, and a simultaneous root
// iteration with a posteriori radius bounds.

#pragma once

#include "seczeta/bigreal.hpp"
#include "seczeta/rational.hpp"

#include <string>
#include <vector>

namespace seczeta {

struct IntPolynomial {
    std::vector<Int> coeff;  // lowest degree first, leading nonzero
    Int scale;               // positive denominator cleared on construction
    Int content;             // gcd divided out; stored form is primitive

    long degree() const { return static_cast<long>(coeff.size()) - 1; }
    std::string str() const;
};

// clear denominators and divide out the content; throws on the zero polynomial
IntPolynomial make_int_polynomial(const std::vector<Rational>& rational_coeffs);

// sum_{m=0}^{k} 2^m (2^m - 2) B_m E_{k-m} C(k,m) (x - x^m)(1+x)^{k-m},
// expanded exactly and scaled primitive. k even >= 2.
IntPolynomial conj_poly(unsigned k);

// c_i = eps * c_{n-i} for a fixed eps in {+1,-1}, after stripping roots at 0
bool self_inversive_check(const IntPolynomial& p);

struct RootBox {
    BigFloat re, im;
    BigFloat radius;  // disk around (re, im) containing a true root
};

struct UnimodularReport {
    BigFloat deviation;  // upper bound on max |1 - |root|| over all roots
    bool certified;      // deviation < 10^{-digits/2} and self-inversive
    std::vector<RootBox> roots;  // distinct roots (after squarefree deflation)
    long degree;           // of the input polynomial
    long deflated_degree;  // distinct roots actually iterated
};

// All roots by Aberth simultaneous iteration at the requested precision,
// radius bounds from the Weierstrass corrections. Throws when the iteration
// fails to converge (retry with more digits).
UnimodularReport unit_circle_deviation(const IntPolynomial& p, long digits);

}  // namespace seczeta
