#include "mukai/rational.hpp"

namespace mukai {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw Error("division-by-zero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (sgn(den) == 0)
        throw Error("division-by-zero", "rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::from_string(const std::string &text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(text), mpz_class(1));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument &) {
        throw Error("parse", "not a rational: '" + text + "'");
    }
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw Error("division-by-zero", "inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const
{
    return v_.get_str();
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-v_));
}

Rational &Rational::operator+=(const Rational &o)
{
    v_ += o.v_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    v_ -= o.v_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    v_ *= o.v_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw Error("division-by-zero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational &base, unsigned exponent)
{
    Rational r = 1;
    for (unsigned i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

} // namespace mukai
