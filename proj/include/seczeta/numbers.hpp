// Bernoulli and Euler numbers, binomials, the character chi_{-4}, integer
// factoring helpers, and the exact rational parts of zeta/beta values at
// integers. Caches are append-only and safe for concurrent readers.

#pragma once

#include "seczeta/rational.hpp"

#include <utility>
#include <vector>

namespace seczeta {

// B_m with B_1 = -1/2; zero for odd m >= 3.
Rational bernoulli(unsigned m);

// Signed Euler numbers from sec's Taylor series: E_0=1, E_2=-1, E_4=5, ...
// Zero for odd m.
Int euler_number(unsigned m);

// C(k, m); zero when m < 0 or m > k.
Int binomial(unsigned k, long m);

// 1 for n = 1 mod 4, -1 for n = 3 mod 4, 0 for even n.
int chi4(const Int& n);

// Sum of 1/p over primes p with (p-1) | k. bernoulli(k) minus this is an
// integer for even k.
Rational von_staudt_fraction(unsigned k);

// zeta(i) / pi^i for even i >= 2, as an exact rational.
Rational zeta_pi_ratio(unsigned i);

// beta(j) / pi^j for odd j >= 1 (Dirichlet beta), as an exact rational.
Rational beta_pi_ratio(unsigned j);

// Prime factorization, exponents > 0, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

// n = s^2 * d with d squarefree; returns (s, d). Requires n > 0.
std::pair<Int, Int> squarefree_split(const Int& n);

bool is_perfect_square(const Int& n);

}  // namespace seczeta
