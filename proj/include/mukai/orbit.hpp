#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mukai/semigroup.hpp"

namespace mukai {

/// Canonical ordered Q-basis of the Pic model for a ModelSpec. Order:
/// diagonal Neron-Severi classes, then for each pair i < j the symmetric
/// class (and, for d > 0, the w-twisted one), then the Pic^0 unit classes
/// (i, r) row-major, real before w-twisted. Monomial indices everywhere
/// refer to this order.
class PicBasis {
public:
    explicit PicBasis(const ModelSpec &spec);

    const ModelSpec &model() const { return model_; }
    int size() const { return static_cast<int>(elems_.size()); }

    PicClass element(int index) const;
    std::string label(int index) const;

    /// Exact coordinates; inverse of summing coords[i] * element(i).
    std::vector<Rational> coords(const PicClass &D) const;

private:
    struct Elem {
        enum Kind { ns_diag, ns_sym, ns_skew, pic0_re, pic0_im } kind;
        int i, j; // j is the column (ns) or Mordell-Weil slot (pic0)
    };
    ModelSpec model_;
    std::vector<Elem> elems_;
};

/// Monomial in the Pic-basis variables: sorted multiset of basis indices.
using SymMonomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex on the sorted
/// index lists.
struct GradedLexLess {
    bool operator()(const SymMonomial &a, const SymMonomial &b) const;
};

/// Element of the free symmetric algebra on the Pic-model basis classes,
/// truncated at degree_cap: monomials longer than the cap are identically
/// zero. Models the divisor-generated subring; the truncation is the only
/// relation imposed, so computed spans bound the true ones from above.
class SymCycle {
public:
    explicit SymCycle(int degree_cap);

    static SymCycle one(int degree_cap);
    static SymCycle variable(int degree_cap, int index);

    int degree_cap() const { return cap_; }
    const std::map<SymMonomial, Rational, GradedLexLess> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    const SymMonomial &leading_monomial() const; // largest in graded-lex
    const Rational &leading_coeff() const;

    int min_degree() const; // -1 for zero
    int max_degree() const;
    SymCycle component(int degree) const;
    std::vector<int> degrees() const; // sorted distinct degrees present

    void add_term(SymMonomial mono, const Rational &coeff);
    SymCycle scaled(const Rational &r) const;

    friend SymCycle operator+(const SymCycle &a, const SymCycle &b);
    friend SymCycle operator-(const SymCycle &a, const SymCycle &b);
    /// Truncating product.
    friend SymCycle operator*(const SymCycle &a, const SymCycle &b);

    friend bool operator==(const SymCycle &a, const SymCycle &b)
    {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymCycle &a, const SymCycle &b) { return !(a == b); }

    std::string str(const PicBasis &basis) const;

private:
    int cap_;
    std::map<SymMonomial, Rational, GradedLexLess> terms_;
};

SymCycle pow(const SymCycle &base, int exponent);

/// Expands a PicClass into the degree-1 cycle sum_i coords_i * x_i.
SymCycle expand_class(const PicClass &D, const PicBasis &basis, int degree_cap);

/// The multiplicative extension of h^* from the Pic basis to monomials:
/// each variable maps to the expansion of affine_pullback(h, basis class),
/// products expand and truncate at the cap. Degree-preserving.
SymCycle sym_pullback(const AffineEndo &h, const SymCycle &x, const PicBasis &basis);

/// Incremental reduced-row-echelon basis over the graded-lex monomial
/// order: leading coefficients 1, pairwise distinct leading monomials,
/// each eliminated from every other row. The row set is the unique RREF
/// of the span, independent of insertion order.
class EchelonBasis {
public:
    /// Fully reduces v against the rows; zero remainder means membership.
    SymCycle reduce(SymCycle v) const;
    bool contains(const SymCycle &v) const { return reduce(v).is_zero(); }

    /// Inserts v if it enlarges the span; returns the canonical new row.
    std::optional<SymCycle> insert(const SymCycle &v);

    int dimension() const { return static_cast<int>(rows_.size()); }
    /// Rows sorted by decreasing leading monomial.
    const std::vector<SymCycle> &rows() const { return rows_; }

private:
    std::vector<SymCycle> rows_;
};

struct OrbitReport {
    int dimension = 0;
    std::vector<SymCycle> basis;
    long generators_applied = 0;
    int rounds = 0;
    bool converged = false;
};

/// dim of degree <= cap part of the free symmetric algebra on k variables:
/// sum_{n=0}^{cap} C(k+n-1, n). Saturates instead of overflowing.
unsigned long long ambient_symmetric_dimension(int k, int cap);

/// Worklist closure of the span of the orbit of x under the generators
/// (each endo as (f, 0), each point as (id, a), applied in declaration
/// order). x is split into homogeneous components first; the closure is
/// degree-graded. Terminates within (ambient dimension) rounds; a report
/// with converged = false is only possible when max_rounds is set below
/// that bound.
OrbitReport orbit_span(const GeneratorSet &gens, const SymCycle &x, long max_rounds);

struct CertificateReport {
    int words = 0;
    int in_span = 0;
    bool all_in_span = false;
};

/// Samples random words over the generators (length <= max_len, endo
/// exponents 1..3, translation exponents -3..3) and checks that each
/// word's pullback of x lies in the reported span. Deterministic for a
/// fixed seed.
CertificateReport orbit_certificate(const GeneratorSet &gens, const SymCycle &x,
                                    const OrbitReport &report, int words, int max_len,
                                    uint64_t seed);

struct PowerSpan {
    int n;
    unsigned long long bound; // C(dim V + n - 1, n)
    int dimension;            // exact span of the n-th powers of the orbit
    bool within_bound;
};

struct Step3Report {
    ModelSpec base_model;
    ModelSpec product_model;
    int degree_cap;
    PicClass poincare;
    OrbitReport l_span;
    std::vector<PowerSpan> powers;
    bool converged;
};

/// Builds the product model B = E^{2g} for A x A-dual, the Poincare
/// divisor class (the [[0, I], [I, 0]] Hermitian block), lifts each endo
/// generator f to f x Id and each translation point a to the point
/// (-a, 0), then spans the orbit of the Poincare class and of each of its
/// powers n <= 2g, reporting the exact dimensions next to the symmetric
/// power bounds. max_rounds 0 means the ambient bound.
Step3Report step3_pipeline(const GeneratorSet &gens, long max_rounds = 0);

} // namespace mukai
