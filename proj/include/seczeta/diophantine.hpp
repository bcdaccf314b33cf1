// Diophantine quantities controlling |sec(pi n z)|: distance from n z to the
// nearest half-integer, the indices where that distance dips below the
// (log n)^2 / n cutoff, and Worley-style near-convergent candidates.

#pragma once

#include "seczeta/bigreal.hpp"
#include "seczeta/cfrac.hpp"
#include "seczeta/quadsurd.hpp"

#include <vector>

namespace seczeta {

struct HalfIntegerGap {
    Int k;              // nz is closest to k + 1/2
    QuadSurd gap_exact; // |nz - 1/2 - k|, exact
    BigReal gap;        // same value rendered at the requested precision
};

// k minimizing |nz - 1/2 - k|; ties (rational z only) break toward smaller k.
// Throws std::domain_error when nz is exactly a half-integer.
HalfIntegerGap nearest_half_integer_gap(const QuadSurd& z, const Int& n, long digits);

// Indices 2 <= n <= N with gap(n) < scale * (log n)^2 / n. Index 1 is never
// included: the threshold degenerates there. The cutoff scale is exposed so
// audits can tighten or relax the window.
std::vector<long> hard_indices(const QuadSurd& z, long N, const Rational& scale = Rational(1));

// All fractions (a p_l + b p_{l-1}) / (a q_l + b q_{l-1}) with |a|, |b| < 2k
// and positive denominator, reduced and deduplicated. Together with the
// convergents these cover every reduced p/q with q_l <= q <= q_{l+1} and
// |z - p/q| < k/q^2.
std::vector<Rational> worley_candidates(const QuadSurd& z, size_t ell, const Rational& k);

// Upper bound U >= |sec(pi n z)|, from |cos(pi n z)| = sin(pi gap) >= 2 gap.
BigReal sec_magnitude_bound(const QuadSurd& z, const Int& n, long digits = 50);

}  // namespace seczeta
