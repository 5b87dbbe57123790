#pragma once

#include <vector>

#include "mukai/exterior.hpp"

namespace mukai {

/// Cohomology model for the transform attached to a dimension-g abelian
/// variety: e1..e2g generate the source factor, f1..f2g the dual factor,
/// and the Poincare class is l = sum_i e_i ^ f_i on the product. The same
/// l drives both transform directions.
struct FMContext {
    int g;
    Ground source; // the variety
    Ground dual;   // its dual
    Ground prod;   // variety x dual
    Multivector l;
    Multivector exp_l; // cached exp(l)
};

/// Builds the context for dimension g >= 1. The Poincare class satisfies
/// l^n = 0 for n > 2g, and swapping e_i with f_i negates it.
FMContext poincare_class(int g);

/// sum_{n=0}^{N} u^n / n! with N the largest n such that
/// n * min_degree(u) <= dim_cap. The exponent must have even degrees only
/// and no degree-0 part.
Multivector exp_class(const Multivector &u, int dim_cap);

/// F(alpha) = integrate over the source factor of p1^*(alpha) ^ exp(l).
/// Takes classes on the source to classes on the dual; degree k goes to
/// degree 2g - k.
Multivector fourier(const FMContext &ctx, const Multivector &alpha);

/// Mirror transform with the factors exchanged and the same Poincare
/// class: integrate over the dual factor of p2^*(beta) ^ exp(l).
Multivector dual_fourier(const FMContext &ctx, const Multivector &beta);

struct InversionReport {
    int g = 0;
    std::vector<bool> basis_pass; // indexed by source basis mask
    int failures = 0;
    bool all_pass = false;
};

/// Verifies dual_fourier(fourier(b)) == (-1)^g * [-1]^* b exactly for all
/// 2^{2g} basis multivectors b of the source algebra. A failure is a
/// report outcome, not an error.
InversionReport check_inversion(int g);

} // namespace mukai
