#include "mukai/fourier.hpp"

namespace mukai {

FMContext poincare_class(int g)
{
    if (g < 1)
        throw Error("bad-model", "dimension must be at least 1");
    if (4 * g > 64)
        throw Error("bad-model", "dimension too large for the 64-generator term representation");
    Ground source = GroundSpace::standard(2 * g, "e");
    Ground dual = GroundSpace::standard(2 * g, "f");
    Ground prod = GroundSpace::product(source, dual);
    Multivector l(prod);
    for (int i = 0; i < 2 * g; ++i)
        l.add_term((uint64_t(1) << i) | (uint64_t(1) << (2 * g + i)), Rational(1));
    Multivector exp_l = exp_class(l, prod->dim());
    return FMContext{g, std::move(source), std::move(dual), std::move(prod),
                     std::move(l), std::move(exp_l)};
}

Multivector exp_class(const Multivector &u, int dim_cap)
{
    if (!u.even_degrees_only())
        throw Error("bad-shape", "exponential of an odd-degree class is not defined here");
    if (u.is_zero())
        return Multivector::unit(u.ground());
    int min_deg = u.min_degree();
    if (min_deg == 0)
        throw Error("bad-shape", "exponent must have no degree-0 part");
    Multivector sum = Multivector::unit(u.ground());
    Multivector power = Multivector::unit(u.ground());
    for (int n = 1; n * min_deg <= dim_cap; ++n) {
        power = wedge(power, u).scaled(Rational(1, n)); // u^n / n!
        if (power.is_zero())
            break;
        sum = sum + power;
    }
    return sum;
}

Multivector fourier(const FMContext &ctx, const Multivector &alpha)
{
    if (!same_space(alpha.ground(), ctx.source))
        throw Error("ground-mismatch", "transform input must live on the source factor");
    Multivector lifted = project_pullback(Factor::first, alpha, ctx.prod);
    return fiber_integrate(Factor::first, wedge(lifted, ctx.exp_l));
}

Multivector dual_fourier(const FMContext &ctx, const Multivector &beta)
{
    if (!same_space(beta.ground(), ctx.dual))
        throw Error("ground-mismatch", "dual transform input must live on the dual factor");
    Multivector lifted = project_pullback(Factor::second, beta, ctx.prod);
    return fiber_integrate(Factor::second, wedge(lifted, ctx.exp_l));
}

InversionReport check_inversion(int g)
{
    FMContext ctx = poincare_class(g);
    InversionReport report;
    report.g = g;
    LinearSubstitution minus_one = LinearSubstitution::scalar(ctx.source, Rational(-1));
    Rational sign = (g % 2 == 0) ? Rational(1) : Rational(-1);
    uint64_t count = uint64_t(1) << (2 * g);
    report.basis_pass.resize(count, false);
    for (uint64_t mask = 0; mask < count; ++mask) {
        Multivector b = Multivector::term(ctx.source, mask, Rational(1));
        Multivector lhs = dual_fourier(ctx, fourier(ctx, b));
        Multivector rhs = pullback(minus_one, b).scaled(sign);
        bool ok = (lhs == rhs);
        report.basis_pass[mask] = ok;
        if (!ok)
            ++report.failures;
    }
    report.all_pass = report.failures == 0;
    return report;
}

} // namespace mukai
