// Continued fractions of quadratic surds via the exact integer state
// machine on (P + sqrt(D))/Q triples, convergents, and Pell's equation.

#pragma once

#include "seczeta/quadsurd.hpp"

#include <vector>

namespace seczeta {

// Eventually periodic expansion [a0; prefix..., (period...) repeating].
// Partial quotients after a0 are >= 1 and the stored period is minimal.
struct CFrac {
    Int a0;
    std::vector<Int> prefix;
    std::vector<Int> period;

    // partial quotient a_l for any l >= 0
    Int quotient(size_t l) const {
        if (l == 0) return a0;
        --l;
        if (l < prefix.size()) return prefix[l];
        return period[(l - prefix.size()) % period.size()];
    }
};

struct Convergent {
    Int p;
    Int q;
    size_t index;
};

// Exact expansion of an irrational quadratic surd. Rational input throws.
CFrac cfrac_of_surd(const QuadSurd& z);

// First L convergents p_0/q_0 ... p_{L-1}/q_{L-1}.
std::vector<Convergent> convergents(const CFrac& cf, size_t L);

// Minimal positive solution of X^2 - j Y^2 = 1; j must be >= 2 and not a
// perfect square.
std::pair<Int, Int> pell_fundamental(const Int& j);

// First `count` solutions generated from the fundamental one by
// (X1 X + j Y1 Y, X1 Y + Y1 X).
std::vector<std::pair<Int, Int>> pell_solutions(const Int& j, size_t count);

}  // namespace seczeta
