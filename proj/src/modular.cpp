#include "seczeta/modular.hpp"

#include "seczeta/numbers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace seczeta {

std::string Mat2Z::str() const {
    std::ostringstream os;
    os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
    return os.str();
}

void GenWord::append(char gen, long exp) {
    if (exp == 0) return;
    if (!letters.empty() && letters.back().gen == gen) {
        letters.back().exp += exp;
        if (letters.back().exp == 0) letters.pop_back();
        return;
    }
    letters.push_back({gen, exp});
}

std::string GenWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << letters[i].gen << '^' << letters[i].exp;
    }
    return os.str();
}

QuadSurd moebius(const Mat2Z& m, const QuadSurd& z) {
    QuadSurd den = Rational(m.c) * z + QuadSurd(Rational(m.d));
    if (den.sign() == 0) throw std::domain_error("moebius: pole, cz + d = 0");
    QuadSurd num = Rational(m.a) * z + QuadSurd(Rational(m.b));
    return num / den;
}

Mat2Z word_to_matrix(const GenWord& w) {
    Mat2Z m;
    for (const GenLetter& l : w.letters) {
        Int e2 = Int(l.exp) * 2;
        Mat2Z g = l.gen == 'A' ? Mat2Z(1, e2, 0, 1) : Mat2Z(1, 0, e2, 1);
        m = m * g;
    }
    return m;
}

namespace {

// q minimizing |x - q y|, ties toward floor(x/y)
Int nearest_quotient(const Int& x, const Int& y) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    // r has the sign of y; compare |r| against |y - r|
    Int r2 = y - r;
    if (mpz_cmpabs(r2.get_mpz_t(), r.get_mpz_t()) < 0) return q + 1;
    return q;
}

}  // namespace

std::optional<GenWord> sanov_factor(const Mat2Z& m) {
    if (m.det() != 1) throw std::domain_error("sanov_factor: determinant must be 1");
    // members are congruent to I mod 2
    if (mpz_even_p(m.a.get_mpz_t()) || mpz_even_p(m.d.get_mpz_t()) ||
        mpz_odd_p(m.b.get_mpz_t()) || mpz_odd_p(m.c.get_mpz_t()))
        return std::nullopt;

    Int a = m.a, b = m.b, c = m.c, d = m.d;
    size_t bits = 2;
    for (const Int* e : {&a, &b, &c, &d})
        bits = std::max(bits, mpz_sizeinbase(e->get_mpz_t(), 2));
    const size_t cap = 10 * bits + 16;

    GenWord w;
    for (size_t step = 0; step <= cap; ++step) {
        if (c == 0) {
            if (sgn(a) < 0) { a = -a; b = -b; d = -d; }
            // a = d = 1, b even
            Int e = b / 2;
            if (e != 0) w.append('A', e.get_si());
            return w;
        }
        int ca = mpz_cmpabs(a.get_mpz_t(), c.get_mpz_t());
        if (ca == 0) return std::nullopt;  // parity excludes |a| = |c| for members
        if (ca > 0) {
            Int q = nearest_quotient(a, 2 * c);
            Int na = a - 2 * q * c;
            if (mpz_cmpabs(na.get_mpz_t(), a.get_mpz_t()) >= 0) return std::nullopt;  // no descent
            a = na;
            b = b - 2 * q * d;
            w.append('A', q.get_si());
        } else {
            Int q = nearest_quotient(c, 2 * a);
            Int nc = c - 2 * q * a;
            if (mpz_cmpabs(nc.get_mpz_t(), c.get_mpz_t()) >= 0) return std::nullopt;
            c = nc;
            d = d - 2 * q * b;
            w.append('B', q.get_si());
        }
    }
    return std::nullopt;
}

std::optional<FixedPointResult> fixed_point_matrix(const Int& j,
                                                  std::vector<FixedPointScanEntry>* scan_log,
                                                  std::size_t scan_cap) {
    std::vector<std::pair<Int, Int>> sols = pell_solutions(j, scan_cap);
    QuadSurd root = QuadSurd::sqrt_of(Rational(j));
    for (std::size_t idx = 0; idx < sols.size(); ++idx) {
        const auto& [X, Y] = sols[idx];
        Mat2Z c(X, j * Y, Y, X);
        std::optional<GenWord> word = sanov_factor(c);
        if (scan_log) scan_log->push_back({X, Y, word.has_value()});
        if (word) {
            if (!(moebius(c, root) == root))
                throw std::logic_error("fixed_point_matrix: Pell matrix does not fix sqrt(j)");
            return FixedPointResult{c, std::move(*word), idx};
        }
    }
    return std::nullopt;
}

QuadSurd fe_rhs(unsigned k, const QuadSurd& z) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("fe_rhs: k must be even and >= 2");
    QuadSurd t = Rational(2) * z + QuadSurd(Rational(1));
    if (t.sign() == 0) throw std::domain_error("fe_rhs: pole, 2z + 1 = 0");
    QuadSurd zp1 = z + QuadSurd(Rational(1));
    QuadSurd t1k = t.pow(1 - static_cast<long>(k));

    QuadSurd acc{Rational(0)};
    for (unsigned m = 0; m <= k; ++m) {
        Int em = euler_number(k - m);
        if (em == 0) continue;
        Rational bm = bernoulli(m);
        if (bm.is_zero()) continue;
        Rational two_pow = m == 0 ? Rational(-1, 2) : Rational(Int(Int(1) << (m - 1))) - Rational(1);
        if (two_pow.is_zero()) continue;  // m = 1
        Rational coef = two_pow * bm * Rational(em) * Rational(binomial(k, static_cast<long>(m)));
        QuadSurd bracket = t.pow(static_cast<long>(m) - static_cast<long>(k)) - t1k;
        acc = acc + coef * (zp1.pow(static_cast<long>(k - m)) * bracket);
    }
    Int kfact;
    mpz_fac_ui(kfact.get_mpz_t(), k);
    Rational pref(((k / 2) % 2 == 0) ? Int(1) : Int(-1), kfact);
    return pref * acc;
}

namespace {

std::string word_prefix_str(const GenWord& w, size_t upto) {
    GenWord p;
    for (size_t i = 0; i <= upto && i < w.letters.size(); ++i)
        p.letters.push_back(w.letters[i]);
    return p.str();
}

}  // namespace

PsiRelation push_relation(unsigned k, const GenWord& w, const QuadSurd& z) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("push_relation: k must be even and >= 2");
    QuadSurd u = z;
    QuadSurd alpha{Rational(1)};
    QuadSurd rho{Rational(0)};
    const QuadSurd one{Rational(1)};

    for (size_t i = w.letters.size(); i-- > 0;) {
        const GenLetter& l = w.letters[i];
        if (l.gen == 'A') {
            u = u + QuadSurd(Rational(2 * l.exp));
            continue;
        }
        long reps = l.exp > 0 ? l.exp : -l.exp;
        for (long r = 0; r < reps; ++r) {
            if (l.exp > 0) {
                QuadSurd t = Rational(2) * u + one;
                if (t.sign() == 0)
                    throw PoleOnOrbit("push_relation: pole applying prefix " + word_prefix_str(w, i));
                QuadSurd a1 = t.pow(1 - static_cast<long>(k));
                rho = a1 * rho + fe_rhs(k, u);
                alpha = a1 * alpha;
                u = u / t;
            } else {
                QuadSurd den = one - Rational(2) * u;
                if (den.sign() == 0)
                    throw PoleOnOrbit("push_relation: pole applying prefix " + word_prefix_str(w, i));
                QuadSurd v = u / den;
                QuadSurd t = Rational(2) * v + one;
                if (t.sign() == 0)
                    throw PoleOnOrbit("push_relation: pole applying prefix " + word_prefix_str(w, i));
                QuadSurd a1 = t.pow(1 - static_cast<long>(k));
                rho = (rho - fe_rhs(k, v)) / a1;
                alpha = alpha / a1;
                u = v;
            }
        }
    }

    PsiRelation rel{k, alpha, rho, word_to_matrix(w), z};
    if (!(moebius(rel.matrix, z) == u))
        throw std::logic_error("push_relation: composition mismatch with word matrix");
    return rel;
}

Rational solve_fixed(const PsiRelation& rel) {
    if (!(moebius(rel.matrix, rel.point) == rel.point))
        throw NotFixedError("solve_fixed: point is not fixed by the matrix");
    const QuadSurd one{Rational(1)};
    if (rel.alpha == one) throw DegenerateRelation("solve_fixed: alpha = 1");
    QuadSurd c = rel.rho / (one - rel.alpha);
    if (!c.is_rational())
        throw std::runtime_error("solve_fixed: value has a nonzero surd component");
    return c.a();
}

PsiExpr rewrite_rules(unsigned k, const PsiExpr& expr) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("rewrite_rules: k must be even and >= 2");
    std::map<QuadSurd, Rational> merged;
    for (const PsiTerm& t : expr) {
        if (t.coeff.is_zero()) continue;
        QuadSurd z = t.arg;
        if (z.sign() < 0) z = -z;                          // psi(-z) = psi(z)
        QuadSurd half = Rational(1, 2) * z;
        z = z - Rational(Int(2 * half.floor_int())) * QuadSurd(Rational(1));  // mod 2
        merged[z] += t.coeff;
    }
    PsiExpr out;
    for (auto& [arg, coeff] : merged)
        if (!coeff.is_zero()) out.push_back({coeff, arg});
    return out;
}

PsiExpr semiperiod_expand(unsigned k, const PsiTerm& term) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("semiperiod_expand: k must be even and >= 2");
    Rational c = term.coeff * Rational(Int(Int(1) << (k - 1)));
    QuadSurd half = Rational(1, 2) * term.arg;
    return {{c, half}, {c, half + QuadSurd(Rational(1))}};
}

}  // namespace seczeta
