#pragma once

#include <gmpxx.h>

#include <string>

#include "mukai/error.hpp"

namespace mukai {

/// Exact rational number. Always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);

    /// Parses "n" or "n/d", optional leading minus on n.
    static Rational from_string(const std::string &text);

    const mpz_class &num() const { return v_.get_num(); }
    const mpz_class &den() const { return v_.get_den(); }

    bool is_zero() const { return ::sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return ::sgn(v_); }

    Rational abs() const;
    Rational inverse() const;

    /// "n" or "n/d".
    std::string str() const;

    Rational operator-() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

Rational pow(const Rational &base, unsigned exponent);

} // namespace mukai
