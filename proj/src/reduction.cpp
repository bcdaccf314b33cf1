#include "seczeta/reduction.hpp"

#include "seczeta/numbers.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace seczeta {

namespace {

constexpr std::size_t kStepCap = 10000;

Rational pow2(long e) {
    // 2^e as an exact rational, e of either sign
    Int p = Int(1) << static_cast<unsigned long>(e >= 0 ? e : -e);
    if (e >= 0) return Rational(p);
    return Rational(Int(1), p);
}

// |z| folded into the fundamental domain of psi: even, period 2, and
// psi(2 - z) = psi(z) give a representative in (0, 1).
QuadSurd norm_psi_arg(QuadSurd z) {
    if (z.sign() < 0) z = -z;
    QuadSurd half = Rational(1, 2) * z;
    z = z - Rational(Int(2 * half.floor_int())) * QuadSurd(Rational(1));
    if (z > QuadSurd(Rational(1))) z = QuadSurd(Rational(2)) - z;
    return z;
}

// K is odd with period 1 and K(1 - w) = -K(w); returns the representative in
// (0, 1/2) and multiplies the picked-up sign into `coeff`.
QuadSurd norm_k_arg(QuadSurd w, QuadSurd& coeff) {
    if (w.sign() < 0) {
        w = -w;
        coeff = -coeff;
    }
    w = w - Rational(w.floor_int()) * QuadSurd(Rational(1));
    if (w > QuadSurd(Rational(1, 2))) {
        w = QuadSurd(Rational(1)) - w;
        coeff = -coeff;
    }
    return w;
}

// xi is odd with period 1 and xi(1 - z) = -xi(z); representative in (0, 1/2].
QuadSurd norm_xi_arg(QuadSurd z, QuadSurd& coeff) {
    if (z.sign() < 0) {
        z = -z;
        coeff = -coeff;
    }
    z = z - Rational(z.floor_int()) * QuadSurd(Rational(1));
    if (z > QuadSurd(Rational(1, 2))) {
        z = QuadSurd(Rational(1)) - z;
        coeff = -coeff;
    }
    return z;
}

}  // namespace

QuadSurd closed_term_psi(unsigned s, const QuadSurd& z) {
    QuadSurd acc = (-pow2(s + 1) * beta_pi_ratio(s + 1)) * z.pow(s);
    for (unsigned i = 2; i <= s; i += 2) {
        Rational c = 2 * zeta_pi_ratio(i) * pow2(s + 1 - i) * beta_pi_ratio(s + 1 - i);
        acc = acc + c * z.pow(static_cast<long>(s - i));
    }
    return acc;
}

QuadSurd closed_term_k(unsigned s, const QuadSurd& w) {
    QuadSurd acc = beta_pi_ratio(s + 1) * w.inv();
    for (unsigned i = 1; i + 1 <= s; i += 2) {
        Rational c = -2 * beta_pi_ratio(i) * zeta_pi_ratio(s - i + 1);
        acc = acc + c * w.pow(static_cast<long>(s - i));
    }
    return acc;
}

QuadSurd closed_term_xi(unsigned s, const QuadSurd& z) {
    QuadSurd acc = zeta_pi_ratio(s + 1) * (z.inv() + z.pow(s));
    for (unsigned i = 2; i + 1 <= s; i += 2) {
        Rational c = -2 * zeta_pi_ratio(i) * zeta_pi_ratio(s - i + 1);
        acc = acc + c * z.pow(static_cast<long>(s - i));
    }
    return acc;
}

ExactValue psi_exact(unsigned s, const QuadSurd& z) {
    if (s < 2 || s % 2 != 0) throw std::domain_error("psi_exact: s must be even and >= 2");
    if (z.is_rational()) throw std::domain_error("psi_exact: argument must be a quadratic irrational");

    // invariant: psi_s(z0)/pi^s == accum + coeff * F(cur), where F alternates
    // between psi_s/pi^s (at psi nodes) and K_s/pi^s (at K nodes)
    QuadSurd accum{Rational(0)};
    QuadSurd coeff{Rational(1)};
    QuadSurd cur = norm_psi_arg(z);

    struct Node {
        QuadSurd accum, coeff;
    };
    std::unordered_map<QuadSurd, Node, QuadSurdHash> visited;

    for (std::size_t step = 0; step < kStepCap; ++step) {
        auto it = visited.find(cur);
        if (it != visited.end()) {
            // accum0 + coeff0 * X == accum + coeff * X
            QuadSurd dc = it->second.coeff - coeff;
            if (dc.sign() == 0) throw std::runtime_error("psi_exact: degenerate orbit cycle");
            QuadSurd x = (accum - it->second.accum) / dc;
            return ExactValue{it->second.accum + it->second.coeff * x, s, step};
        }
        visited.emplace(cur, Node{accum, coeff});

        // psi node -> K node
        accum = accum + coeff * closed_term_psi(s, cur);
        coeff = coeff * (pow2(s) * cur.pow(static_cast<long>(s) - 1));
        QuadSurd w = (Rational(2) * cur).inv();
        w = norm_k_arg(std::move(w), coeff);

        // K node -> psi node
        accum = accum + coeff * closed_term_k(s, w);
        coeff = coeff * (Rational(1, 2) * w.pow(static_cast<long>(s) - 1));
        cur = norm_psi_arg((Rational(2) * w).inv());
    }
    throw std::runtime_error("psi_exact: orbit did not close within the step cap");
}

ExactValue xi_exact(unsigned s, const QuadSurd& z) {
    if (s < 3 || s % 2 == 0) throw std::domain_error("xi_exact: s must be odd and >= 3");
    if (z.is_rational()) throw std::domain_error("xi_exact: argument must be a quadratic irrational");

    QuadSurd accum{Rational(0)};
    QuadSurd coeff{Rational(1)};
    QuadSurd cur = norm_xi_arg(z, coeff);

    struct Node {
        QuadSurd accum, coeff;
    };
    std::unordered_map<QuadSurd, Node, QuadSurdHash> visited;

    for (std::size_t step = 0; step < kStepCap; ++step) {
        auto it = visited.find(cur);
        if (it != visited.end()) {
            QuadSurd dc = it->second.coeff - coeff;
            if (dc.sign() == 0) throw std::runtime_error("xi_exact: degenerate orbit cycle");
            QuadSurd x = (accum - it->second.accum) / dc;
            return ExactValue{it->second.accum + it->second.coeff * x, s, step};
        }
        visited.emplace(cur, Node{accum, coeff});

        accum = accum + coeff * closed_term_xi(s, cur);
        coeff = -coeff * cur.pow(static_cast<long>(s) - 1);
        cur = norm_xi_arg(cur.inv(), coeff);
    }
    throw std::runtime_error("xi_exact: orbit did not close within the step cap");
}

}  // namespace seczeta
