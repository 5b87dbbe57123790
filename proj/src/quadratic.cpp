#include "mukai/quadratic.hpp"

namespace mukai {

bool is_squarefree(int n)
{
    if (n < 0)
        return false;
    if (n < 2)
        return true;
    for (int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

QuadScalar::QuadScalar(Rational re, Rational im, int d)
    : re_(std::move(re)), im_(std::move(im)), d_(d)
{
    if (d < 0)
        throw Error("bad-model", "discriminant must be non-negative, got " + std::to_string(d));
    if (d == 0 && !im_.is_zero())
        throw Error("d-mismatch", "nonzero w-part with d = 0 (trivial quadratic extension)");
}

static void require_same_disc(const QuadScalar &a, const QuadScalar &b)
{
    if (a.disc() != b.disc())
        throw Error("discriminant-mismatch",
                    "operands live in different fields: d = " + std::to_string(a.disc()) +
                        " vs d = " + std::to_string(b.disc()));
}

Rational QuadScalar::norm() const
{
    return re_ * re_ + Rational(d_) * im_ * im_;
}

QuadScalar QuadScalar::inverse() const
{
    Rational n = norm();
    if (n.is_zero())
        throw Error("division-by-zero", "inverse of zero scalar");
    Rational ninv = n.inverse();
    return {re_ * ninv, -im_ * ninv, d_};
}

QuadScalar operator+(const QuadScalar &a, const QuadScalar &b)
{
    require_same_disc(a, b);
    return {a.re_ + b.re_, a.im_ + b.im_, a.d_};
}

QuadScalar operator-(const QuadScalar &a, const QuadScalar &b)
{
    require_same_disc(a, b);
    return {a.re_ - b.re_, a.im_ - b.im_, a.d_};
}

QuadScalar operator*(const QuadScalar &a, const QuadScalar &b)
{
    require_same_disc(a, b);
    // (x + yw)(x' + y'w) = (xx' - d yy') + (xy' + x'y) w
    return {a.re_ * b.re_ - Rational(a.d_) * a.im_ * b.im_,
            a.re_ * b.im_ + b.re_ * a.im_, a.d_};
}

std::string QuadScalar::str() const
{
    if (im_.is_zero())
        return re_.str();
    std::string w = im_.is_one() ? "w" : (im_ == Rational(-1) ? "-w" : im_.str() + "w");
    if (re_.is_zero())
        return w;
    if (im_.sign() > 0)
        return re_.str() + "+" + w;
    return re_.str() + w;
}

} // namespace mukai
