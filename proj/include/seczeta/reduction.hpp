// Exact evaluation of the secant and cotangent zeta functions at real
// quadratic irrationals. Both reductions walk a functional-equation orbit
// inside Q(sqrt(d)): each step swaps the argument through an exact reciprocity
// relation whose inhomogeneous term is a rational-coefficient polynomial, and
// the argument is renormalized into a fundamental interval. Orbits of
// quadratic arguments revisit a normalized argument after finitely many
// steps, at which point the linear relation pins the value down exactly.
//
// All values are returned in units of pi^s: the true function value is
// coeff * pi^s with coeff in Q(sqrt(d)).

#pragma once

#include "seczeta/quadsurd.hpp"

#include <cstddef>

namespace seczeta {

struct ExactValue {
    QuadSurd coeff;   // function value divided by pi^s
    unsigned s;       // weight
    std::size_t steps;  // orbit length until the cycle closed
};

// psi_s(z) = sum_{n>=1} sec(pi n z)/n^s for even s >= 2 and irrational
// quadratic z. Throws std::domain_error for rational z or odd/zero s,
// std::runtime_error if the orbit fails to close (cycle cap, degenerate
// linear system); neither failure has been observed on the tested range.
ExactValue psi_exact(unsigned s, const QuadSurd& z);

// xi_s(z) = sum_{n>=1} cot(pi n z)/n^s for odd s >= 3 and irrational
// quadratic z.
ExactValue xi_exact(unsigned s, const QuadSurd& z);

// Inhomogeneous closed terms of the three reciprocity relations, exposed for
// tests (they are cross-checked numerically against truncated series).
QuadSurd closed_term_psi(unsigned s, const QuadSurd& z);   // psi -> K handoff
QuadSurd closed_term_k(unsigned s, const QuadSurd& w);     // K -> psi handoff
QuadSurd closed_term_xi(unsigned s, const QuadSurd& z);    // xi -> xi handoff

}  // namespace seczeta
