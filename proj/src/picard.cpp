#include "mukai/picard.hpp"

namespace mukai {

QuadMatrix::QuadMatrix(int rows, int cols, int d)
    : rows_(rows), cols_(cols), d_(d),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), QuadScalar::zero(d))
{
    if (rows < 1 || cols < 1)
        throw Error("bad-shape", "matrix dimensions must be positive");
}

QuadMatrix QuadMatrix::identity(int n, int d)
{
    return scalar(n, d, Rational(1));
}

QuadMatrix QuadMatrix::scalar(int n, int d, const Rational &c)
{
    QuadMatrix m(n, n, d);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = QuadScalar::rational(c, d);
    return m;
}

QuadScalar &QuadMatrix::at(int i, int j)
{
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const QuadScalar &QuadMatrix::at(int i, int j) const
{
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

bool QuadMatrix::is_zero() const
{
    for (const auto &x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

QuadMatrix QuadMatrix::conj_transpose() const
{
    QuadMatrix m(cols_, rows_, d_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j).conj();
    return m;
}

QuadMatrix QuadMatrix::scaled(const Rational &r) const
{
    QuadMatrix m(rows_, cols_, d_);
    for (size_t k = 0; k < e_.size(); ++k)
        m.e_[k] = e_[k].scaled(r);
    return m;
}

QuadMatrix QuadMatrix::scaled(const QuadScalar &s) const
{
    QuadMatrix m(rows_, cols_, d_);
    for (size_t k = 0; k < e_.size(); ++k)
        m.e_[k] = e_[k] * s;
    return m;
}

QuadMatrix QuadMatrix::operator-() const
{
    return scaled(Rational(-1));
}

static void require_same_shape(const QuadMatrix &a, const QuadMatrix &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("bad-shape", "matrix shapes differ");
    if (a.disc() != b.disc())
        throw Error("discriminant-mismatch", "matrices live over different fields");
}

QuadMatrix operator+(const QuadMatrix &a, const QuadMatrix &b)
{
    require_same_shape(a, b);
    QuadMatrix m(a.rows_, a.cols_, a.d_);
    for (size_t k = 0; k < a.e_.size(); ++k)
        m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

QuadMatrix operator-(const QuadMatrix &a, const QuadMatrix &b)
{
    require_same_shape(a, b);
    QuadMatrix m(a.rows_, a.cols_, a.d_);
    for (size_t k = 0; k < a.e_.size(); ++k)
        m.e_[k] = a.e_[k] - b.e_[k];
    return m;
}

QuadMatrix operator*(const QuadMatrix &a, const QuadMatrix &b)
{
    if (a.cols_ != b.rows_)
        throw Error("bad-shape", "inner matrix dimensions differ");
    if (a.d_ != b.d_)
        throw Error("discriminant-mismatch", "matrices live over different fields");
    QuadMatrix m(a.rows_, b.cols_, a.d_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            QuadScalar acc = QuadScalar::zero(a.d_);
            for (int k = 0; k < a.cols_; ++k)
                acc = acc + a.at(i, k) * b.at(k, j);
            m.at(i, j) = acc;
        }
    return m;
}

bool operator==(const QuadMatrix &a, const QuadMatrix &b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_ && a.e_ == b.e_;
}

std::string QuadMatrix::str() const
{
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : " [";
        for (int j = 0; j < cols_; ++j) {
            if (j)
                out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i + 1 < rows_)
            out += ";";
    }
    return out + "]";
}

ModelSpec::ModelSpec(int g_, int d_, int rho_) : g(g_), d(d_), rho(rho_)
{
    if (g < 1)
        throw Error("bad-model", "g must be at least 1");
    if (rho < 1)
        throw Error("bad-model", "rho must be at least 1");
    if (d < 0 || !is_squarefree(d))
        throw Error("bad-model", "d must be a non-negative square-free integer");
}

int ModelSpec::ns_dim() const
{
    return d == 0 ? g * (g + 1) / 2 : g * g;
}

int ModelSpec::pic0_dim() const
{
    return g * rho * (d == 0 ? 1 : 2);
}

HermClass::HermClass(QuadMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw Error("bad-shape", "Neron-Severi class must be a square matrix");
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = i; j < m_.cols(); ++j)
            if (m_.at(i, j) != m_.at(j, i).conj())
                throw Error("non-hermitian", "entry (" + std::to_string(i) + "," +
                                                 std::to_string(j) +
                                                 ") is not the conjugate of its transpose");
}

HermClass HermClass::zero(int g, int d)
{
    return HermClass(QuadMatrix(g, g, d));
}

HermClass HermClass::scaled(const Rational &r) const
{
    return HermClass(m_.scaled(r));
}

HermClass operator+(const HermClass &a, const HermClass &b)
{
    return HermClass(a.m_ + b.m_);
}

HermClass operator-(const HermClass &a, const HermClass &b)
{
    return HermClass(a.m_ - b.m_);
}

PicClass::PicClass(HermClass ns, Pic0Class alg0) : ns_(std::move(ns)), alg0_(std::move(alg0))
{
    if (ns_.matrix().rows() != alg0_.matrix().rows())
        throw Error("bad-shape", "Neron-Severi and Pic^0 parts disagree on g");
    if (ns_.matrix().disc() != alg0_.matrix().disc())
        throw Error("discriminant-mismatch", "class parts live over different fields");
}

PicClass PicClass::zero(const ModelSpec &spec)
{
    return PicClass(HermClass::zero(spec.g, spec.d), Pic0Class::zero(spec.g, spec.rho, spec.d));
}

PicClass PicClass::scaled(const Rational &r) const
{
    return PicClass(ns_.scaled(r), alg0_.scaled(r));
}

PicClass operator+(const PicClass &a, const PicClass &b)
{
    return PicClass(a.ns_ + b.ns_, a.alg0_ + b.alg0_);
}

PicClass operator-(const PicClass &a, const PicClass &b)
{
    return PicClass(a.ns_ - b.ns_, a.alg0_ - b.alg0_);
}

Endo::Endo(QuadMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw Error("bad-shape", "endomorphism matrix must be square");
}

PicClass endo_pullback(const Endo &f, const PicClass &D)
{
    if (f.g() != D.g() || f.disc() != D.disc())
        throw Error("bad-shape", "endomorphism does not match the class shape");
    QuadMatrix adj = f.matrix().conj_transpose();
    return PicClass(HermClass(adj * D.ns().matrix() * f.matrix()),
                    Pic0Class(adj * D.alg0().matrix()));
}

PicClass translate_pullback(const Point &a, const PicClass &D)
{
    if (a.matrix().rows() != D.g() || a.matrix().cols() != D.rho() ||
        a.matrix().disc() != D.disc())
        throw Error("bad-shape", "point does not match the class shape");
    return PicClass(D.ns(), Pic0Class(D.alg0().matrix() + D.ns().matrix() * a.matrix()));
}

Pic0Class split_antisym(const PicClass &D)
{
    return D.alg0();
}

std::pair<PicClass, PicClass> sym_antisym_projectors(const PicClass &D)
{
    int g = D.g(), rho = D.rho(), d = D.disc();
    PicClass plus(D.ns(), Pic0Class::zero(g, rho, d));
    PicClass minus(HermClass::zero(g, d), D.alg0());
    return {plus, minus};
}

PicClass ns_lift(const HermClass &N, int rho)
{
    return PicClass(N, Pic0Class::zero(N.g(), rho, N.disc()));
}

PicClass minus_one_pullback(const PicClass &D)
{
    return PicClass(D.ns(), -D.alg0());
}

} // namespace mukai
