// Arbitrary-precision numerical evaluation: direct series for the secant and
// cotangent zeta functions with constructive tail bounds from continued
// fraction data, Hurwitz zeta at rational points, identity residual checks,
// and rational recognition for the conjecture scan.

#pragma once

#include "seczeta/bigreal.hpp"
#include "seczeta/quadsurd.hpp"
#include "seczeta/reduction.hpp"

#include <optional>
#include <vector>

namespace seczeta {

// thrown when a requested evaluation cannot reach the digit target and the
// caller asked for a hard guarantee
class UnresolvedError : public std::runtime_error {
public:
    explicit UnresolvedError(const std::string& what) : std::runtime_error(what) {}
};

// |value.err| < 10^-digits * (1 + |value.mid|)?
bool meets_digits(const BigReal& value, long digits);

// coeff * pi^s of an exact engine value, rendered at `digits`
BigReal render_exact(const ExactValue& v, long digits);

// Hurwitz zeta(s, a) for real s > 1 and rational a in (0, 1], by
// Euler-Maclaurin with a rigorous remainder bound folded into the error.
BigReal hurwitz_zeta(double s, const Rational& a, long digits);

// psi_s(z) = sum sec(pi n z)/n^s. Even integer s dispatches to the exact
// reduction engine; other s fall back to direct summation (psi_direct below),
// whose reachable accuracy is limited by the series' own convergence rate.
BigReal psi_numeric(double s, const QuadSurd& z, long digits);

// Raw adaptive partial sum with tail bounded via the continued fraction of
// 2z: |sec(pi n z)| <= 2(a_max + 2) n. The error bound always covers
// truncation plus rounding; when the digit target cannot be met before the
// term cap (or the bound stalls, e.g. s close to 2 where no effective bound
// exists) the best effort is returned with the honest, larger bound.
BigReal psi_direct(double s, const QuadSurd& z, long digits);

// psi_s(p/q) for odd q: groups residues mod 2q into Hurwitz zetas. Rational
// points with even denominator are rejected (sec hits a pole there).
BigReal psi_rational_point(long s, const Int& p, const Int& q, long digits);

// xi_s(z) = sum cot(pi n z)/n^s for odd integer s >= 3: exact engine value
// rendered at `digits`.
BigReal cotangent_zeta(long s, const QuadSurd& z, long digits);

// direct partial sum counterpart of cotangent_zeta (validation path)
BigReal xi_direct(long s, const QuadSurd& z, long digits);

// sum tan(pi n z)/n^s = xi_s(z) - 2 xi_s(2z) and
// sum csc(pi n z)/n^s = xi_s(z/2) - xi_s(z). Both are evaluated through the
// identity (exact engine) AND as a direct partial sum; the two paths are
// required to agree within their combined error bounds before returning the
// identity-path value.
BigReal tangent_series(long s, const QuadSurd& z, long digits);
BigReal cosecant_series(long s, const QuadSurd& z, long digits);

// |LHS - RHS_N| of the cosecant-secant partial fraction identity
//   pi csc(pi z x) sec(pi x) = 1/(zx)
//     + 8x sum_{n odd} chi4(n) csc(pi n z/2)/(n^2 - 4x^2)
//     - 2zx sum_n sec(pi n (1 + 1/z))/(n^2 - z^2 x^2)
// truncating both series at N. Throws std::domain_error naming the term when
// a denominator vanishes.
BigReal lemma_residual(const Rational& x, const QuadSurd& z, long n_terms, long digits);

// truncated classical partial fraction expansions (test oracles):
// 16 x^2 sum_{n} chi4(n)/(n(n^2-4x^2))   ->  pi (sec(pi x) - 1)
// 2 x sum_k (-1)^{k+1}/(k^2-x^2)         ->  pi csc(pi x) - 1/x
BigReal partial_fraction_secant(const Rational& x, long n_terms, long digits);
BigReal partial_fraction_cosecant(const Rational& x, long n_terms, long digits);

// Diagnostics behind the direct-summation error analysis at z: the largest
// continued fraction partial quotient feeding the badly-approximable floor,
// the per-term slope it implies (|term_n| <= slope * n), and upper bounds on
// the absolute tail past each requested cutoff. `cotangent` switches the
// distance normalization from half-integers of z (sec/tan, quotients of 2z)
// to integers of z (cot/csc).
struct SeriesAudit {
    Int a_max;
    Rational slope;
    std::vector<std::pair<long, BigFloat>> tails;
};
SeriesAudit series_audit(double s, const QuadSurd& z, bool cotangent,
                         const std::vector<long>& cutoffs);

// Continued fraction recognition of a resolved value. Refuses (nullopt) when
// the error bound is too large relative to 1/max_denominator^2; accepts the
// smallest-denominator convergent p/q with q <= max_denominator and
// |x - p/q| < 4 err + 1e-8/q^2.
std::optional<Rational> recognize_rational(const BigReal& x, const Int& max_denominator);

struct ScanRecord {
    unsigned k;
    long j;
    long digits;
    std::optional<Rational> recognized;
    BigReal residual;
    bool verified;  // re-verification at digits + 20 succeeded
};

// psi_k(sqrt j)/pi^k over the grid, lexicographic in (k, j). Recognition is
// kept only when the residual beats 10^{-digits/2} and survives recomputation
// at digits + 20. Square j reduce to rational points. jobs > 1 evaluates
// cells in parallel; output order is independent of scheduling.
std::vector<ScanRecord> conjecture1_scan(const std::vector<unsigned>& k_set,
                                         const std::vector<long>& j_set,
                                         long digits, unsigned jobs = 1);

}  // namespace seczeta
