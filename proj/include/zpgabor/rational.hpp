#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace zpgabor {

/// Exact rational number in canonical form: denominator > 0, gcd(|num|, den) = 1.
/// Arbitrary precision via GMP. Immutable value semantics; safe to copy across threads.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(make_mpz(n)) {}

    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(make_mpz(num), make_mpz(den));
        q_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "n" or "n/d" in base 10.
    static Rational from_string(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(mpz_class(s), mpz_class(1));
        }
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_nonnegative() const { return sgn(q_) >= 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const { return q_.get_str(); }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}  // already canonical

    static mpz_class make_mpz(long long v) {
        // mpz_class has no long long ctor on LP64-agnostic paths; go through set_si-compatible type
        mpz_class z;
        if (v >= 0) {
            z = static_cast<unsigned long>(v);
        } else {
            z = static_cast<unsigned long>(-(v + 1));
            z += 1;
            z = -z;
        }
        return z;
    }

    mpq_class q_;
};

}  // namespace zpgabor
