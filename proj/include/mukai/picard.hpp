#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mukai/quadratic.hpp"

namespace mukai {

/// Dense matrix over Q(w), w^2 = -d. Row-major, 0-based.
class QuadMatrix {
public:
    QuadMatrix(int rows, int cols, int d);

    static QuadMatrix identity(int n, int d);
    static QuadMatrix scalar(int n, int d, const Rational &c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int disc() const { return d_; }

    QuadScalar &at(int i, int j);
    const QuadScalar &at(int i, int j) const;

    bool is_zero() const;

    QuadMatrix conj_transpose() const;
    QuadMatrix scaled(const Rational &r) const;
    QuadMatrix scaled(const QuadScalar &s) const;
    QuadMatrix operator-() const;

    friend QuadMatrix operator+(const QuadMatrix &a, const QuadMatrix &b);
    friend QuadMatrix operator-(const QuadMatrix &a, const QuadMatrix &b);
    friend QuadMatrix operator*(const QuadMatrix &a, const QuadMatrix &b);

    friend bool operator==(const QuadMatrix &a, const QuadMatrix &b);
    friend bool operator!=(const QuadMatrix &a, const QuadMatrix &b) { return !(a == b); }

    std::string str() const;

private:
    int rows_, cols_, d_;
    std::vector<QuadScalar> e_;
};

/// Model parameters for A = E^g: g copies of an elliptic curve E whose
/// endomorphism algebra is Q(w), w^2 = -d (d = 0 for plain Z), with
/// Mordell-Weil module M = Q(w)^rho.
struct ModelSpec {
    int g;
    int d;
    int rho;

    ModelSpec(int g_, int d_, int rho_);

    /// dim_Q of the Neron-Severi model: g(g+1)/2 for d = 0, g^2 otherwise.
    int ns_dim() const;
    /// dim_Q of the Pic^0 model: g * rho * (d == 0 ? 1 : 2).
    int pic0_dim() const;
    int pic_dim() const { return ns_dim() + pic0_dim(); }

    friend bool operator==(const ModelSpec &a, const ModelSpec &b)
    {
        return a.g == b.g && a.d == b.d && a.rho == b.rho;
    }
    friend bool operator!=(const ModelSpec &a, const ModelSpec &b) { return !(a == b); }
};

/// Neron-Severi class: Hermitian g x g matrix (entries[j][i] = conj of
/// entries[i][j]; real diagonal).
class HermClass {
public:
    explicit HermClass(QuadMatrix m);
    static HermClass zero(int g, int d);

    const QuadMatrix &matrix() const { return m_; }
    int g() const { return m_.rows(); }
    int disc() const { return m_.disc(); }

    HermClass scaled(const Rational &r) const;
    friend HermClass operator+(const HermClass &a, const HermClass &b);
    friend HermClass operator-(const HermClass &a, const HermClass &b);
    friend bool operator==(const HermClass &a, const HermClass &b) { return a.m_ == b.m_; }
    friend bool operator!=(const HermClass &a, const HermClass &b) { return !(a == b); }

private:
    QuadMatrix m_;
};

/// Algebraically trivial part: g x rho matrix, row i = the Mordell-Weil
/// component at factor i.
class Pic0Class {
public:
    explicit Pic0Class(QuadMatrix m) : m_(std::move(m)) {}
    static Pic0Class zero(int g, int rho, int d) { return Pic0Class(QuadMatrix(g, rho, d)); }

    const QuadMatrix &matrix() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    Pic0Class scaled(const Rational &r) const { return Pic0Class(m_.scaled(r)); }
    Pic0Class operator-() const { return Pic0Class(-m_); }
    friend Pic0Class operator+(const Pic0Class &a, const Pic0Class &b) { return Pic0Class(a.m_ + b.m_); }
    friend Pic0Class operator-(const Pic0Class &a, const Pic0Class &b) { return Pic0Class(a.m_ - b.m_); }
    friend bool operator==(const Pic0Class &a, const Pic0Class &b) { return a.m_ == b.m_; }
    friend bool operator!=(const Pic0Class &a, const Pic0Class &b) { return !(a == b); }

private:
    QuadMatrix m_;
};

/// Line bundle class in split form: Neron-Severi part plus Pic^0 part.
class PicClass {
public:
    PicClass(HermClass ns, Pic0Class alg0);
    static PicClass zero(const ModelSpec &spec);

    const HermClass &ns() const { return ns_; }
    const Pic0Class &alg0() const { return alg0_; }
    int g() const { return ns_.g(); }
    int rho() const { return alg0_.matrix().cols(); }
    int disc() const { return ns_.disc(); }

    PicClass scaled(const Rational &r) const;
    friend PicClass operator+(const PicClass &a, const PicClass &b);
    friend PicClass operator-(const PicClass &a, const PicClass &b);
    friend bool operator==(const PicClass &a, const PicClass &b)
    {
        return a.ns_ == b.ns_ && a.alg0_ == b.alg0_;
    }
    friend bool operator!=(const PicClass &a, const PicClass &b) { return !(a == b); }

private:
    HermClass ns_;
    Pic0Class alg0_;
};

/// Group endomorphism of A = E^g: arbitrary g x g matrix over Q(w).
class Endo {
public:
    explicit Endo(QuadMatrix m);
    static Endo identity(int g, int d) { return Endo(QuadMatrix::identity(g, d)); }
    /// Multiplication by n.
    static Endo integer(int g, int d, long n) { return Endo(QuadMatrix::scalar(g, d, Rational(n))); }

    const QuadMatrix &matrix() const { return m_; }
    int g() const { return m_.rows(); }
    int disc() const { return m_.disc(); }

    /// Rosati adjoint for the principal polarization: conjugate transpose.
    Endo rosati() const { return Endo(m_.conj_transpose()); }

    friend Endo operator+(const Endo &a, const Endo &b) { return Endo(a.m_ + b.m_); }
    friend Endo operator*(const Endo &a, const Endo &b) { return Endo(a.m_ * b.m_); }
    friend bool operator==(const Endo &a, const Endo &b) { return a.m_ == b.m_; }
    friend bool operator!=(const Endo &a, const Endo &b) { return !(a == b); }

private:
    QuadMatrix m_;
};

/// Rational point of A = E^g: g x rho matrix over Q(w).
class Point {
public:
    explicit Point(QuadMatrix m) : m_(std::move(m)) {}
    static Point zero(int g, int rho, int d) { return Point(QuadMatrix(g, rho, d)); }

    const QuadMatrix &matrix() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }

    Point scaled(const Rational &r) const { return Point(m_.scaled(r)); }
    Point operator-() const { return Point(-m_); }
    friend Point operator+(const Point &a, const Point &b) { return Point(a.m_ + b.m_); }
    friend bool operator==(const Point &a, const Point &b) { return a.m_ == b.m_; }
    friend bool operator!=(const Point &a, const Point &b) { return !(a == b); }

private:
    QuadMatrix m_;
};

/// f^*(N, c) = (f' N f, f' c) with f' the Rosati adjoint. Quadratic on the
/// Neron-Severi part, linear on the Pic^0 part.
PicClass endo_pullback(const Endo &f, const PicClass &D);

/// t_a^*(N, c) = (N, c + N a). Classes with N = 0 are fixed, and
/// t_a^* D - D always lands in the Pic^0 part.
PicClass translate_pullback(const Point &a, const PicClass &D);

/// The Pic^0 component; agrees with (D - [-1]^* D) / 2.
Pic0Class split_antisym(const PicClass &D);

/// ((N, 0), (0, c)): the symmetric/antisymmetric projector pair. Their sum
/// is D and each is idempotent.
std::pair<PicClass, PicClass> sym_antisym_projectors(const PicClass &D);

/// Section of the Neron-Severi projection: N |-> (N, 0). Commutes with
/// endomorphism pullback. rho just sizes the zero Pic^0 block.
PicClass ns_lift(const HermClass &N, int rho = 1);

/// [-1]^*(N, c) = (N, -c); an involution.
PicClass minus_one_pullback(const PicClass &D);

} // namespace mukai
