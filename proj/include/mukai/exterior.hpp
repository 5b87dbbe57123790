#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mukai/rational.hpp"

namespace mukai {

class GroundSpace;
using Ground = std::shared_ptr<const GroundSpace>;

/// Ordered set of degree-1 generators of an exterior algebra over Q.
/// A product space is the disjoint concatenation of its two factors and
/// remembers them. At most 64 generators (terms are stored as bitmasks).
class GroundSpace {
public:
    static Ground make(std::vector<std::string> labels);
    /// Labels prefix1 .. prefix<m>.
    static Ground standard(int m, const std::string &prefix);
    static Ground product(Ground first, Ground second);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::string &label(int i) const { return labels_[static_cast<size_t>(i)]; }
    /// -1 if absent.
    int index_of(const std::string &label) const;

    bool is_product() const { return first_ != nullptr; }
    const Ground &first() const { return first_; }
    const Ground &second() const { return second_; }

private:
    GroundSpace() = default;
    std::vector<std::string> labels_;
    Ground first_, second_;
};

/// Spaces compare by their label sequences.
bool same_space(const Ground &a, const Ground &b);

enum class Factor { first, second };

/// Sparse multivector: map from strictly increasing generator subsets
/// (bitmasks, bit i = generator i) to nonzero rational coefficients.
///
/// Orientation convention: the fundamental class of a space is its
/// generators wedged in increasing label order. Every pushforward sign
/// below follows from this one choice.
class Multivector {
public:
    explicit Multivector(Ground ground);

    static Multivector zero(Ground ground);
    static Multivector unit(Ground ground);
    static Multivector generator(Ground ground, int index);
    static Multivector term(Ground ground, uint64_t mask, const Rational &coeff);

    const Ground &ground() const { return ground_; }
    const std::map<uint64_t, Rational> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero multivector.
    int min_degree() const;
    int max_degree() const;
    bool is_homogeneous() const;
    bool even_degrees_only() const;
    Multivector component(int degree) const;

    /// Accumulates, dropping the entry if the sum cancels.
    void add_term(uint64_t mask, const Rational &coeff);

    Multivector scaled(const Rational &r) const;
    Multivector operator-() const;

    friend Multivector operator+(const Multivector &a, const Multivector &b);
    friend Multivector operator-(const Multivector &a, const Multivector &b);
    /// Wedge product.
    friend Multivector operator*(const Multivector &a, const Multivector &b);

    friend bool operator==(const Multivector &a, const Multivector &b);
    friend bool operator!=(const Multivector &a, const Multivector &b) { return !(a == b); }

    std::string str() const;

private:
    Ground ground_;
    std::map<uint64_t, Rational> terms_;
};

/// Bilinear, associative, graded-commutative product. Repeated generators
/// give 0; the sign is the parity of the transpositions merging the two
/// increasing index sets.
Multivector wedge(const Multivector &u, const Multivector &v);

/// Linear substitution on generators: column j of the matrix is the image
/// of generator j. pullback(T, -) is the unique algebra endomorphism
/// extending it in degree 1.
class LinearSubstitution {
public:
    /// matrix[i][j] = coefficient of generator i in the image of generator j.
    LinearSubstitution(Ground ground, std::vector<std::vector<Rational>> matrix);

    static LinearSubstitution identity(Ground ground);
    static LinearSubstitution scalar(Ground ground, const Rational &c);
    /// T x Id on a product space (T acts on the first factor).
    static LinearSubstitution lift_first(const LinearSubstitution &t, const Ground &product);
    /// Id x T on a product space.
    static LinearSubstitution lift_second(const LinearSubstitution &t, const Ground &product);

    const Ground &ground() const { return ground_; }
    const Rational &entry(int i, int j) const;

    std::vector<std::vector<Rational>> const &matrix() const { return matrix_; }

private:
    Ground ground_;
    std::vector<std::vector<Rational>> matrix_;
};

/// Composite substitution with the contravariant convention
///   pullback(compose(T, S), u) == pullback(S, pullback(T, u)),
/// i.e. (T o S)^* = S^* o T^*.
LinearSubstitution compose(const LinearSubstitution &t, const LinearSubstitution &s);

/// Degree-preserving algebra endomorphism extending the substitution.
Multivector pullback(const LinearSubstitution &subst, const Multivector &u);

/// Re-indexes a class on one factor into the product algebra: the
/// injective algebra homomorphism realizing p_factor^*.
Multivector project_pullback(Factor factor, const Multivector &u, const Ground &product);

/// Fiber integration over the named factor of a product space. A term
/// contributes only if it contains the full set of integrated generators;
/// it emits the remaining generators with the sign of rewriting the term
/// as (rest) ^ (fiber orientation class). On even-dimensional fibers this
/// is the same as sorting the integrated block to the front. Realizes the
/// pushforward of the complementary projection and keeps the projection
/// formula exact on every product space.
Multivector fiber_integrate(Factor factor, const Multivector &u);

} // namespace mukai
