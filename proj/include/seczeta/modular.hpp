// The subgroup generated by A = [[1,2],[0,1]] and B = [[1,0],[2,1]] inside
// PSL2(Z): word/matrix round trips, membership by greedy Euclidean descent,
// Pell-derived fixed-point matrices for sqrt(j), and exact propagation of the
// psi_k transformation law along a word.

#pragma once

#include "seczeta/cfrac.hpp"
#include "seczeta/quadsurd.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seczeta {

struct Mat2Z {
    Int a{1}, b{0}, c{0}, d{1};

    Mat2Z() = default;
    Mat2Z(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    Int det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    // PSL2 representative: a > 0, or a = 0 and b > 0
    Mat2Z canonical() const {
        if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) return Mat2Z(-a, -b, -c, -d);
        return *this;
    }
    bool same_psl(const Mat2Z& o) const {
        Mat2Z x = canonical(), y = o.canonical();
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Mat2Z operator*(const Mat2Z& o) const {
        return Mat2Z(a * o.a + b * o.c, a * o.b + b * o.d,
                     c * o.a + d * o.c, c * o.b + d * o.d);
    }

    std::string str() const;
};

struct GenLetter {
    char gen;   // 'A' or 'B'
    long exp;   // nonzero
};

struct GenWord {
    std::vector<GenLetter> letters;

    // merges with a trailing letter of the same generator; drops exp 0
    void append(char gen, long exp);
    bool empty() const { return letters.empty(); }
    std::string str() const;  // "A^1 B^-2", empty word -> "1"
};

// exact (az + b)/(cz + d); throws std::domain_error at a pole
QuadSurd moebius(const Mat2Z& m, const QuadSurd& z);

Mat2Z word_to_matrix(const GenWord& w);

// Greedy descent on the first column (the even continued fraction of a/c).
// Returns the word with word_to_matrix(w) = ±M, or nullopt when M is not in
// the subgroup (detected by parity or failure to descend).
std::optional<GenWord> sanov_factor(const Mat2Z& m);

struct FixedPointScanEntry {
    Int X, Y;
    bool factorable;
};

struct FixedPointResult {
    Mat2Z matrix;
    GenWord word;
    std::size_t pell_index;  // 0-based position in the Pell solution list
};

// Scans Pell solutions of X^2 - jY^2 = 1 in increasing order (at most
// `scan_cap`), forming C = [[X, jY],[Y, X]], and returns the first C the
// factorizer accepts. nullopt = no factorable solution within the cap; the
// scan log records every attempt either way.
std::optional<FixedPointResult> fixed_point_matrix(
    const Int& j, std::vector<FixedPointScanEntry>* scan_log = nullptr,
    std::size_t scan_cap = 64);

// Exact coefficient of pi^k in psi_k(Bz) = (2z+1)^{1-k} psi_k(z) + fe_rhs(k,z) pi^k.
QuadSurd fe_rhs(unsigned k, const QuadSurd& z);

struct PsiRelation {
    unsigned k;
    QuadSurd alpha;   // (cz+d)^{1-k} product over B-steps
    QuadSurd rho;     // coefficient of pi^k
    Mat2Z matrix;
    QuadSurd point;   // psi_k(matrix . point) = alpha psi_k(point) + rho pi^k
};

class PoleOnOrbit : public std::domain_error {
public:
    explicit PoleOnOrbit(const std::string& what) : std::domain_error(what) {}
};
class NotFixedError : public std::domain_error {
public:
    explicit NotFixedError(const std::string& what) : std::domain_error(what) {}
};
class DegenerateRelation : public std::domain_error {
public:
    explicit DegenerateRelation(const std::string& what) : std::domain_error(what) {}
};

// Composes the transformation law letter by letter, innermost (rightmost
// letter) first: the word g1 g2 ... gr acts as g1(g2(...gr(z))). Throws
// PoleOnOrbit naming the offending prefix when a denominator vanishes.
PsiRelation push_relation(unsigned k, const GenWord& w, const QuadSurd& z);

// rho/(1 - alpha) at a fixed point of the relation's matrix. The value is
// asserted rational (zero surd component) and returned as the coefficient c
// in psi_k(point) = c pi^k. Throws NotFixedError/DegenerateRelation.
Rational solve_fixed(const PsiRelation& rel);

// coeff * psi_k(arg) summand of a symbolic expression
struct PsiTerm {
    Rational coeff;
    QuadSurd arg;
};
using PsiExpr = std::vector<PsiTerm>;

// Applies psi_k(-z) = psi_k(z) then psi_k(z + 2) = psi_k(z) left to right
// until each argument lies in [0, 2); merges terms with equal canonical
// arguments and drops zero coefficients. (Arguments z and 2 - z stay
// distinct here; the evaluator identifies them internally.)
PsiExpr rewrite_rules(unsigned k, const PsiExpr& expr);

// 2^{1-k} psi_k(2z) = psi_k(z) + psi_k(z+1) applied at term level, halving
// the argument: coeff psi_k(w) -> 2^{k-1} coeff [psi_k(w/2) + psi_k(w/2+1)].
// Exposed separately from rewrite_rules because iterating it does not
// terminate.
PsiExpr semiperiod_expand(unsigned k, const PsiTerm& term);

}  // namespace seczeta
