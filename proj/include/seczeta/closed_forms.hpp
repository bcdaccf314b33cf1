// The explicit evaluation families: rational pi^k-coefficients of psi_k at
// the sqrt(2j(2j+1)) arguments and relatives, the beta_k sequence, and the
// denominator evidence report.

#pragma once

#include "seczeta/quadsurd.hpp"

#include <string>
#include <utility>
#include <vector>

namespace seczeta {

enum class Family { gen1, gen2, semiperiod, pell_family, fixed_point };

const char* family_name(Family f);

struct ExactPsiValue {
    unsigned k;
    QuadSurd argument;
    Rational coefficient;  // psi_k(argument) = coefficient * pi^k
    Family provenance;
};

// psi_k(sqrt(2j(2j+1))): quotient-of-surd-powers formula over Q(sqrt(2j/(2j+1)))
ExactPsiValue psi_gen1(unsigned k, long j);

// psi_k(1 + sqrt(2j(2j+1))): the (2j+1)/(2j) ratio variant
ExactPsiValue psi_gen2(unsigned k, long j);

// psi_2(sqrt(8j(2j+1))) = pi^2/6, derived by the half-argument identity from
// gen1 + gen2; the constant coefficient is re-derived, not hardcoded.
ExactPsiValue psi2_semiperiod_family(long j);

// psi_2(sqrt(2j(2jn+1)/n)) = (1 + 3j/n) pi^2/6
ExactPsiValue psi2_pell_family(long j, long n);

// beta_k: the normalized gen1 numerator sequence in exact Q(sqrt(6))
Rational beta(unsigned k);

struct DenominatorProfile {
    unsigned k;
    Rational beta_value;
    std::vector<std::pair<Int, int>> denominator_factors;
    std::vector<Int> predicted_primes;  // p with (p-1) | k, p <= k+1
    std::vector<Int> anomalous_primes;  // p | denominator with (p-1) not | k
    std::string str() const;
};

DenominatorProfile denominator_profile(unsigned k);

}  // namespace seczeta
