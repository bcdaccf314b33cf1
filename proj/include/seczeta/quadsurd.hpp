// Elements a + b*sqrt(d) of a real quadratic field, with a, b rational and
// d a squarefree integer >= 2 (d = 1 exactly when b = 0). Constructors
// canonicalize the radicand, so equality is plain field comparison.
// Elements of different fields never mix; attempting to combine them throws.

#pragma once

#include "seczeta/numbers.hpp"
#include "seczeta/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seczeta {

class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), d_(1) {}
    QuadSurd(const Rational& r) : a_(r), b_(0), d_(1) {}
    QuadSurd(long n) : a_(n), b_(0), d_(1) {}

    // a + b*sqrt(d) for any positive integer d; the square part of d is
    // folded into b (e.g. sqrt(8) is stored as 2*sqrt(2)).
    QuadSurd(const Rational& a, const Rational& b, const Int& d) : a_(a), b_(b), d_(1) {
        if (b_.is_zero()) return;
        if (d <= 0) throw std::domain_error("QuadSurd: radicand must be positive");
        auto [s, df] = squarefree_split(d);
        if (df == 1) {
            a_ += b_ * Rational(s);
            b_ = Rational(0);
        } else {
            b_ *= Rational(s);
            if (!mpz_fits_slong_p(df.get_mpz_t()))
                throw std::domain_error("QuadSurd: radicand too large");
            d_ = df.get_si();
        }
    }

    // sqrt of a positive rational, canonicalized into the squarefree form
    static QuadSurd sqrt_of(const Rational& r) {
        if (r.sign() <= 0) throw std::domain_error("QuadSurd::sqrt_of: need positive argument");
        // sqrt(p/q) = sqrt(p*q)/q
        Int pq = r.num() * r.den();
        auto [s, d] = squarefree_split(pq);
        Rational coeff(s, r.den());
        if (d == 1) return QuadSurd(coeff);
        if (!mpz_fits_slong_p(d.get_mpz_t()))
            throw std::domain_error("QuadSurd::sqrt_of: radicand too large");
        QuadSurd z;
        z.a_ = Rational(0);
        z.b_ = coeff;
        z.d_ = d.get_si();
        return z;
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    QuadSurd operator-() const {
        QuadSurd r;
        r.a_ = -a_; r.b_ = -b_; r.d_ = d_;
        return r;
    }

    QuadSurd operator+(const QuadSurd& o) const {
        long d = merged_radicand(o);
        QuadSurd r;
        r.a_ = a_ + o.a_; r.b_ = b_ + o.b_;
        r.d_ = r.b_.is_zero() ? 1 : d;
        return r;
    }
    QuadSurd operator-(const QuadSurd& o) const { return *this + (-o); }

    QuadSurd operator*(const QuadSurd& o) const {
        long d = merged_radicand(o);
        QuadSurd r;
        r.a_ = a_ * o.a_ + b_ * o.b_ * Rational(d);
        r.b_ = a_ * o.b_ + b_ * o.a_;
        r.d_ = r.b_.is_zero() ? 1 : d;
        return r;
    }

    QuadSurd inv() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("QuadSurd: inverse of zero");
        QuadSurd r;
        r.a_ = a_ / n; r.b_ = -b_ / n;
        r.d_ = r.b_.is_zero() ? 1 : d_;
        return r;
    }

    QuadSurd operator/(const QuadSurd& o) const { return *this * o.inv(); }

    QuadSurd pow(long e) const {
        QuadSurd base = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                                : static_cast<unsigned long>(e);
        QuadSurd r(Rational(1));
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    QuadSurd conj() const {
        QuadSurd r;
        r.a_ = a_; r.b_ = -b_; r.d_ = d_;
        return r;
    }

    // x * conj(x) = a^2 - b^2 d, always rational
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    bool operator==(const QuadSurd& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_.is_zero() || d_ == o.d_);
    }
    bool operator!=(const QuadSurd& o) const { return !(*this == o); }

    // exact sign of a + b*sqrt(d)
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 d
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;  // impossible for irrational values
        bool left_bigger = lhs > rhs;
        return sa > 0 ? (left_bigger ? 1 : -1) : (left_bigger ? -1 : 1);
    }

    bool operator<(const QuadSurd& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadSurd& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadSurd& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadSurd& o) const { return (*this - o).sign() >= 0; }

    // exact floor; integer seed within 2 of the answer, then exact fixup
    Int floor_int() const {
        if (b_.is_zero()) return a_.floor();
        Int root;
        mpz_sqrt(root.get_mpz_t(), (b_ * b_ * Rational(d_)).floor().get_mpz_t());
        Int n = a_.floor() + (b_.sign() > 0 ? root : -(root + 1));
        while (cmp_int(n) < 0) n -= 1;          // value < n: lower n
        while (cmp_int(n + 1) >= 0) n += 1;     // value >= n+1: raise n
        return n;
    }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
        if (b_ == Rational(-1)) s += "-";
        else if (b_ != Rational(1)) s += b_.str() + "*";
        return s + "sqrt(" + std::to_string(d_) + ")";
    }

private:
    // sign of (value - n) for integer n
    int cmp_int(const Int& n) const {
        QuadSurd diff = *this - QuadSurd(Rational(n));
        return diff.sign();
    }

    long merged_radicand(const QuadSurd& o) const {
        if (b_.is_zero()) return o.d_;
        if (o.b_.is_zero()) return d_;
        if (d_ != o.d_)
            throw std::domain_error("QuadSurd: mixed radicands " + std::to_string(d_) +
                                    " and " + std::to_string(o.d_));
        return d_;
    }

    Rational a_, b_;
    long d_;
};

inline QuadSurd operator+(long n, const QuadSurd& z) { return QuadSurd(Rational(n)) + z; }
inline QuadSurd operator-(long n, const QuadSurd& z) { return QuadSurd(Rational(n)) - z; }
inline QuadSurd operator*(long n, const QuadSurd& z) { return QuadSurd(Rational(n)) * z; }
inline QuadSurd operator*(const Rational& r, const QuadSurd& z) { return QuadSurd(r) * z; }

struct QuadSurdHash {
    size_t operator()(const QuadSurd& z) const {
        RationalHash h;
        size_t r = h(z.a());
        r = r * 1099511628211ull ^ h(z.b());
        r = r * 1099511628211ull ^ static_cast<size_t>(z.d());
        return r;
    }
};

}  // namespace seczeta
