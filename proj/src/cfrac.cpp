#include "seczeta/cfrac.hpp"

#include <map>
#include <stdexcept>

namespace seczeta {

namespace {

// floor((P + sqrt(D)) / Q) for nonsquare D > 0, Q != 0.
// sqrt(D) is irrational, so the quotient is never an integer when Q < 0
// and the ceiling adjustment below is exact.
Int floor_quot(const Int& P, const Int& D, const Int& Q) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), D.get_mpz_t());  // floor(sqrt(D))
    Int num = P + r;
    Int q;
    if (Q > 0) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    } else {
        // floor(x/Q) = -ceil(x/|Q|) = -(floor(x/|Q|) + 1) for irrational x
        Int absQ = -Q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), absQ.get_mpz_t());
        q = -(q + 1);
    }
    return q;
}

}  // namespace

CFrac cfrac_of_surd(const QuadSurd& z) {
    if (z.is_rational())
        throw std::domain_error("cfrac_of_surd: rational input has no infinite expansion");

    // Write z = (U + V*sqrt(d)) / W with integers U, V, W, then fold V into
    // the radicand: z = (P + sqrt(D)) / Q with D = V^2 d, sign handled by
    // negating numerator and denominator when V < 0.
    Int ad = z.a().den(), bd = z.b().den();
    Int W = ad * bd;
    Int U = z.a().num() * bd;
    Int V = z.b().num() * ad;
    Int P, D, Q;
    if (V > 0) {
        P = U; D = V * V * Int(z.d()); Q = W;
    } else {
        P = -U; D = V * V * Int(z.d()); Q = -W;
    }
    // Enforce Q | (D - P^2) by scaling the representation.
    if ((D - P * P) % Q != 0) {
        Int absQ = Q < 0 ? Int(-Q) : Q;
        P *= absQ;
        D *= Q * Q;
        Q *= absQ;
    }

    CFrac cf;
    cf.a0 = floor_quot(P, D, Q);
    P = cf.a0 * Q - P;
    Q = (D - P * P) / Q;
    // After one step the tail lies in (1, inf) and all quotients are >= 1.

    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> quots;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            size_t start = it->second;
            cf.prefix.assign(quots.begin(), quots.begin() + start);
            cf.period.assign(quots.begin() + start, quots.end());
            return cf;
        }
        seen.emplace(key, quots.size());
        Int a = floor_quot(P, D, Q);
        quots.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

std::vector<Convergent> convergents(const CFrac& cf, size_t L) {
    std::vector<Convergent> out;
    out.reserve(L);
    Int p_prev(1), q_prev(0);   // p_{-1}, q_{-1}
    Int p_pprev(0), q_pprev(1); // p_{-2}, q_{-2}
    for (size_t l = 0; l < L; ++l) {
        Int a = cf.quotient(l);
        Int p = a * p_prev + p_pprev;
        Int q = a * q_prev + q_pprev;
        out.push_back({p, q, l});
        p_pprev = p_prev; q_pprev = q_prev;
        p_prev = p; q_prev = q;
    }
    return out;
}

std::pair<Int, Int> pell_fundamental(const Int& j) {
    if (j < 2 || is_perfect_square(j))
        throw std::domain_error("pell_fundamental: j must be >= 2 and not a perfect square");
    CFrac cf = cfrac_of_surd(QuadSurd::sqrt_of(Rational(j)));
    // The fundamental solution appears among the first 2*period convergents.
    size_t bound = 2 * cf.period.size() + cf.prefix.size() + 2;
    for (auto& c : convergents(cf, bound)) {
        if (c.p * c.p - j * c.q * c.q == 1 && c.q > 0) return {c.p, c.q};
    }
    throw std::logic_error("pell_fundamental: no solution found in expected range");
}

std::vector<std::pair<Int, Int>> pell_solutions(const Int& j, size_t count) {
    auto [X1, Y1] = pell_fundamental(j);
    std::vector<std::pair<Int, Int>> out;
    Int X = X1, Y = Y1;
    for (size_t i = 0; i < count; ++i) {
        out.emplace_back(X, Y);
        Int Xn = X1 * X + j * Y1 * Y;
        Int Yn = X1 * Y + Y1 * X;
        X = Xn; Y = Yn;
    }
    return out;
}

}  // namespace seczeta
