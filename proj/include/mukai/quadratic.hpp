#pragma once

#include <string>

#include "mukai/rational.hpp"

namespace mukai {

/// True if n has no repeated prime factor (0 and 1 both count).
bool is_squarefree(int n);

/// Element re + im*w of Q(w) with w^2 = -d, d a non-negative square-free
/// integer fixed per model. d = 0 encodes the plain rationals; im is
/// forced to vanish there.
class QuadScalar {
public:
    QuadScalar(Rational re, Rational im, int d);

    static QuadScalar zero(int d) { return {Rational(0), Rational(0), d}; }
    static QuadScalar one(int d) { return {Rational(1), Rational(0), d}; }
    static QuadScalar omega(int d) { return {Rational(0), Rational(1), d}; }
    static QuadScalar rational(const Rational &r, int d) { return {r, Rational(0), d}; }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }
    int disc() const { return d_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    QuadScalar conj() const { return {re_, -im_, d_}; }

    /// x * conj(x) = re^2 + d*im^2; always rational, positive for x != 0.
    Rational norm() const;

    /// conj(x) / norm(x). The caller guarantees x != 0.
    QuadScalar inverse() const;

    QuadScalar scaled(const Rational &r) const { return {re_ * r, im_ * r, d_}; }

    QuadScalar operator-() const { return {-re_, -im_, d_}; }

    friend QuadScalar operator+(const QuadScalar &a, const QuadScalar &b);
    friend QuadScalar operator-(const QuadScalar &a, const QuadScalar &b);
    friend QuadScalar operator*(const QuadScalar &a, const QuadScalar &b);

    friend bool operator==(const QuadScalar &a, const QuadScalar &b)
    {
        return a.d_ == b.d_ && a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const QuadScalar &a, const QuadScalar &b) { return !(a == b); }

    /// "0", "3/2", "w", "-2w", "1+w", "1/2-3w".
    std::string str() const;

private:
    Rational re_, im_;
    int d_;
};

} // namespace mukai
