#include "seczeta/numbers.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace seczeta {

// ---- Bernoulli cache ----
//
// Defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, which
// fixes B_1 = -1/2. The cache only ever grows; readers take a shared lock.

namespace {

std::shared_mutex bern_mu;
std::vector<Rational> bern_cache{Rational(1)};

std::shared_mutex euler_mu;
std::vector<Int> euler_cache{Int(1)};

void extend_bernoulli(unsigned m) {
    std::unique_lock lk(bern_mu);
    while (bern_cache.size() <= m) {
        unsigned n = static_cast<unsigned>(bern_cache.size());
        // sum_{j<n} C(n+1, j) B_j + C(n+1, n) B_n = 0
        Rational s(0);
        for (unsigned j = 0; j < n; ++j) {
            if (bern_cache[j].is_zero()) continue;
            s += Rational(binomial(n + 1, static_cast<long>(j))) * bern_cache[j];
        }
        bern_cache.push_back(-s / Rational(Int(n + 1)));
    }
}

void extend_euler(unsigned m) {
    std::unique_lock lk(euler_mu);
    while (euler_cache.size() <= m) {
        unsigned n = static_cast<unsigned>(euler_cache.size());
        if (n % 2 == 1) {
            euler_cache.push_back(Int(0));
            continue;
        }
        // sum_{j even <= n} C(n, j) E_j = 0 for even n >= 2
        Int s(0);
        for (unsigned j = 0; j < n; j += 2)
            s += binomial(n, static_cast<long>(j)) * euler_cache[j];
        euler_cache.push_back(-s);
    }
}

}  // namespace

Rational bernoulli(unsigned m) {
    {
        std::shared_lock lk(bern_mu);
        if (m < bern_cache.size()) return bern_cache[m];
    }
    extend_bernoulli(m);
    std::shared_lock lk(bern_mu);
    return bern_cache[m];
}

Int euler_number(unsigned m) {
    {
        std::shared_lock lk(euler_mu);
        if (m < euler_cache.size()) return euler_cache[m];
    }
    extend_euler(m);
    std::shared_lock lk(euler_mu);
    return euler_cache[m];
}

Int binomial(unsigned k, long m) {
    if (m < 0 || m > static_cast<long>(k)) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), k, static_cast<unsigned long>(m));
    return r;
}

int chi4(const Int& n) {
    unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 4);
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

Rational von_staudt_fraction(unsigned k) {
    if (k == 0 || k % 2 != 0) throw std::domain_error("von_staudt_fraction: k must be even and positive");
    // (p-1) | k forces p <= k+1, so enumerate divisors d of k and test d+1.
    Rational s(0);
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        Int p(d + 1);
        if (mpz_probab_prime_p(p.get_mpz_t(), 40) > 0) s += Rational(Int(1), p);
    }
    return s;
}

Rational zeta_pi_ratio(unsigned i) {
    if (i < 2 || i % 2 != 0) throw std::domain_error("zeta_pi_ratio: need even i >= 2");
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), i);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, i - 1);
    Rational r = bernoulli(i) * Rational(two_pow, fact);
    return (i / 2) % 2 == 0 ? -r : r;
}

Rational beta_pi_ratio(unsigned j) {
    if (j % 2 != 1) throw std::domain_error("beta_pi_ratio: need odd j >= 1");
    // beta(2m+1) = (-1)^m E_{2m} pi^{2m+1} / (4^{m+1} (2m)!)
    unsigned m = (j - 1) / 2;
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * m);
    Int four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, m + 1);
    Rational r = Rational(euler_number(2 * m), four_pow * fact);
    return m % 2 == 1 ? -r : r;
}

// ---- integer factoring (trial division + Pollard rho) ----

namespace {

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x, c = rng.get_z_range(n - 1) + 1, d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n <= 0) throw std::domain_error("factorize: need n > 0");
    std::vector<std::pair<Int, int>> out;
    for (long p : {2l, 3l, 5l, 7l, 11l, 13l, 17l, 19l, 23l, 29l, 31l, 37l}) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(Int(p), e);
    }
    long p = 41;
    while (p * p <= n && p < 1000000) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(Int(p), e);
        p += 2;
    }
    if (n > 1) {
        std::vector<std::pair<Int, int>> rest;
        factor_into(n, rest);
        // merge duplicates from the recursive split
        for (auto& [q, e] : rest) {
            bool merged = false;
            for (auto& [q2, e2] : out)
                if (q2 == q) { e2 += e; merged = true; break; }
            if (!merged) out.emplace_back(q, e);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
    if (n <= 0) throw std::domain_error("squarefree_split: need n > 0");
    Int s(1), d(1);
    for (auto& [p, e] : factorize(n)) {
        if (e / 2 > 0) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
            s *= pe;
        }
        if (e % 2) d *= p;
    }
    return {s, d};
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace seczeta
