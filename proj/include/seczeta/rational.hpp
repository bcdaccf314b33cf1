// Exact rational arithmetic. Thin canonicalizing layer over GMP's mpq:
// every constructor normalizes, so gcd(|num|, den) = 1 and den >= 1 hold
// for every reachable value.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seczeta {

using Int = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), already_canonical{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), already_canonical{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), already_canonical{}); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_), already_canonical{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inv() const {
        if (v_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_), already_canonical{});
    }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // integer power, negative exponents allowed for nonzero values
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                                : static_cast<unsigned long>(e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
        mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
        return Rational(r, already_canonical{});
    }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    // "p/q" with the "/q" omitted for integers
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    struct already_canonical {};
    Rational(const mpq_class& q, already_canonical) : v_(q) {}
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

struct RationalHash {
    size_t operator()(const Rational& r) const {
        // FNV over the limb strings; cheap and stable
        std::string s = r.str();
        size_t h = 1469598103934665603ull;
        for (char c : s) { h ^= static_cast<unsigned char>(c); h *= 1099511628211ull; }
        return h;
    }
};

}  // namespace seczeta
