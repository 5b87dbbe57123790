#include "mukai/exterior.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace mukai {

Ground GroundSpace::make(std::vector<std::string> labels)
{
    if (labels.empty())
        throw Error("bad-model", "ground space needs at least one generator");
    if (labels.size() > 64)
        throw Error("bad-model", "at most 64 generators supported");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw Error("bad-model", "ground space labels must be distinct");
    auto g = std::shared_ptr<GroundSpace>(new GroundSpace());
    g->labels_ = std::move(labels);
    return g;
}

Ground GroundSpace::standard(int m, const std::string &prefix)
{
    if (m < 1)
        throw Error("bad-model", "ground space dimension must be positive");
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        labels.push_back(prefix + std::to_string(i));
    return make(std::move(labels));
}

Ground GroundSpace::product(Ground first, Ground second)
{
    std::vector<std::string> labels = first->labels();
    labels.insert(labels.end(), second->labels().begin(), second->labels().end());
    auto g = GroundSpace::make(std::move(labels)); // rechecks distinctness
    auto mutable_g = std::const_pointer_cast<GroundSpace>(g);
    mutable_g->first_ = std::move(first);
    mutable_g->second_ = std::move(second);
    return g;
}

int GroundSpace::index_of(const std::string &label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return -1;
    return static_cast<int>(it - labels_.begin());
}

bool same_space(const Ground &a, const Ground &b)
{
    return a == b || a->labels() == b->labels();
}

static void require_same_space(const Ground &a, const Ground &b)
{
    if (!same_space(a, b))
        throw Error("ground-mismatch", "multivectors live on different ground spaces");
}

// Parity of |{(i, j) : i in a, j in b, i > j}|: the transpositions needed
// to merge the increasing blocks (a)(b) into one increasing sequence.
static int merge_sign(uint64_t a, uint64_t b)
{
    int inversions = 0;
    uint64_t rest = b;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        uint64_t above_j = (j == 63) ? 0 : (a >> (j + 1)) << (j + 1);
        inversions += std::popcount(above_j);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

Multivector::Multivector(Ground ground) : ground_(std::move(ground)) {}

Multivector Multivector::zero(Ground ground)
{
    return Multivector(std::move(ground));
}

Multivector Multivector::unit(Ground ground)
{
    Multivector m(std::move(ground));
    m.terms_.emplace(0, Rational(1));
    return m;
}

Multivector Multivector::generator(Ground ground, int index)
{
    if (index < 0 || index >= ground->dim())
        throw Error("bad-index", "generator index out of range");
    Multivector m(std::move(ground));
    m.terms_.emplace(uint64_t(1) << index, Rational(1));
    return m;
}

Multivector Multivector::term(Ground ground, uint64_t mask, const Rational &coeff)
{
    int m = ground->dim();
    if (m < 64 && (mask >> m) != 0)
        throw Error("bad-index", "term mask has bits outside the ground space");
    Multivector v(std::move(ground));
    if (!coeff.is_zero())
        v.terms_.emplace(mask, coeff);
    return v;
}

int Multivector::min_degree() const
{
    int d = -1;
    for (auto &[mask, c] : terms_) {
        int k = std::popcount(mask);
        if (d < 0 || k < d)
            d = k;
    }
    return d;
}

int Multivector::max_degree() const
{
    int d = -1;
    for (auto &[mask, c] : terms_)
        d = std::max(d, std::popcount(mask));
    return d;
}

bool Multivector::is_homogeneous() const
{
    return is_zero() || min_degree() == max_degree();
}

bool Multivector::even_degrees_only() const
{
    for (auto &[mask, c] : terms_)
        if (std::popcount(mask) % 2 != 0)
            return false;
    return true;
}

Multivector Multivector::component(int degree) const
{
    Multivector r(ground_);
    for (auto &[mask, c] : terms_)
        if (std::popcount(mask) == degree)
            r.terms_.emplace(mask, c);
    return r;
}

void Multivector::add_term(uint64_t mask, const Rational &coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Multivector Multivector::scaled(const Rational &r) const
{
    Multivector out(ground_);
    if (r.is_zero())
        return out;
    for (auto &[mask, c] : terms_)
        out.terms_.emplace(mask, c * r);
    return out;
}

Multivector Multivector::operator-() const
{
    return scaled(Rational(-1));
}

Multivector operator+(const Multivector &a, const Multivector &b)
{
    require_same_space(a.ground_, b.ground_);
    Multivector r = a;
    for (auto &[mask, c] : b.terms_)
        r.add_term(mask, c);
    return r;
}

Multivector operator-(const Multivector &a, const Multivector &b)
{
    require_same_space(a.ground_, b.ground_);
    Multivector r = a;
    for (auto &[mask, c] : b.terms_)
        r.add_term(mask, -c);
    return r;
}

Multivector operator*(const Multivector &a, const Multivector &b)
{
    return wedge(a, b);
}

bool operator==(const Multivector &a, const Multivector &b)
{
    return same_space(a.ground_, b.ground_) && a.terms_ == b.terms_;
}

Multivector wedge(const Multivector &u, const Multivector &v)
{
    require_same_space(u.ground(), v.ground());
    Multivector r(u.ground());
    for (auto &[a, ca] : u.terms()) {
        for (auto &[b, cb] : v.terms()) {
            if (a & b)
                continue; // repeated generator
            Rational c = ca * cb;
            if (merge_sign(a, b) < 0)
                c = -c;
            r.add_term(a | b, c);
        }
    }
    return r;
}

std::string Multivector::str() const
{
    if (terms_.empty())
        return "0";
    // sort by (degree, mask) for display
    std::vector<std::pair<uint64_t, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) {
        int dx = std::popcount(x.first), dy = std::popcount(y.first);
        return dx != dy ? dx < dy : x.first < y.first;
    });
    std::string out;
    bool first = true;
    for (auto &[mask, c] : sorted) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0)
                out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        uint64_t rest = mask;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (!mono.empty())
                mono += "^";
            mono += ground_->label(i);
        }
        if (mono.empty())
            out += a.str();
        else if (a.is_one())
            out += mono;
        else
            out += a.str() + " " + mono;
    }
    return out;
}

LinearSubstitution::LinearSubstitution(Ground ground, std::vector<std::vector<Rational>> matrix)
    : ground_(std::move(ground)), matrix_(std::move(matrix))
{
    size_t m = static_cast<size_t>(ground_->dim());
    if (matrix_.size() != m)
        throw Error("bad-shape", "substitution matrix must be square of the ground dimension");
    for (auto &row : matrix_)
        if (row.size() != m)
            throw Error("bad-shape", "substitution matrix must be square of the ground dimension");
}

LinearSubstitution LinearSubstitution::identity(Ground ground)
{
    return scalar(std::move(ground), Rational(1));
}

LinearSubstitution LinearSubstitution::scalar(Ground ground, const Rational &c)
{
    size_t m = static_cast<size_t>(ground->dim());
    std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < m; ++i)
        mat[i][i] = c;
    return LinearSubstitution(std::move(ground), std::move(mat));
}

LinearSubstitution LinearSubstitution::lift_first(const LinearSubstitution &t, const Ground &product)
{
    if (!product->is_product())
        throw Error("ground-mismatch", "lift target is not a product space");
    if (!same_space(t.ground(), product->first()))
        throw Error("ground-mismatch", "substitution does not act on the first factor");
    int ma = product->first()->dim();
    int m = product->dim();
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(m),
                                           std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
    for (int i = 0; i < ma; ++i)
        for (int j = 0; j < ma; ++j)
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.entry(i, j);
    for (int i = ma; i < m; ++i)
        mat[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    return LinearSubstitution(product, std::move(mat));
}

LinearSubstitution LinearSubstitution::lift_second(const LinearSubstitution &t, const Ground &product)
{
    if (!product->is_product())
        throw Error("ground-mismatch", "lift target is not a product space");
    if (!same_space(t.ground(), product->second()))
        throw Error("ground-mismatch", "substitution does not act on the second factor");
    int ma = product->first()->dim();
    int m = product->dim();
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(m),
                                           std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
    for (int i = 0; i < ma; ++i)
        mat[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    for (int i = ma; i < m; ++i)
        for (int j = ma; j < m; ++j)
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.entry(i - ma, j - ma);
    return LinearSubstitution(product, std::move(mat));
}

const Rational &LinearSubstitution::entry(int i, int j) const
{
    return matrix_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

LinearSubstitution compose(const LinearSubstitution &t, const LinearSubstitution &s)
{
    require_same_space(t.ground(), s.ground());
    int m = t.ground()->dim();
    // (T o S)^* = S^* o T^*, so the composite substitution matrix is M_S * M_T.
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(m),
                                           std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rational acc = 0;
            for (int k = 0; k < m; ++k)
                acc += s.entry(i, k) * t.entry(k, j);
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    return LinearSubstitution(t.ground(), std::move(mat));
}

Multivector pullback(const LinearSubstitution &subst, const Multivector &u)
{
    require_same_space(subst.ground(), u.ground());
    int m = u.ground()->dim();
    // images of the generators, computed once
    std::vector<Multivector> image;
    image.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        Multivector img(u.ground());
        for (int i = 0; i < m; ++i)
            img.add_term(uint64_t(1) << i, subst.entry(i, j));
        image.push_back(std::move(img));
    }
    Multivector result(u.ground());
    for (auto &[mask, c] : u.terms()) {
        Multivector acc = Multivector::term(u.ground(), 0, c);
        uint64_t rest = mask;
        while (rest && !acc.is_zero()) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            acc = wedge(acc, image[static_cast<size_t>(j)]);
        }
        result = result + acc;
    }
    return result;
}

Multivector project_pullback(Factor factor, const Multivector &u, const Ground &product)
{
    if (!product->is_product())
        throw Error("ground-mismatch", "target of a projection pullback must be a product space");
    const Ground &slot = factor == Factor::first ? product->first() : product->second();
    if (!same_space(u.ground(), slot))
        throw Error("ground-mismatch", "class does not live on the named factor of the product");
    int shift = factor == Factor::first ? 0 : product->first()->dim();
    Multivector r(product);
    for (auto &[mask, c] : u.terms())
        r.add_term(mask << shift, c);
    return r;
}

Multivector fiber_integrate(Factor factor, const Multivector &u)
{
    const Ground &g = u.ground();
    if (!g->is_product())
        throw Error("ground-mismatch", "fiber integration needs a product ground space");
    int ma = g->first()->dim();
    int mb = g->second()->dim();
    uint64_t first_mask = (ma == 64) ? ~uint64_t(0) : ((uint64_t(1) << ma) - 1);
    uint64_t fiber = factor == Factor::first ? first_mask : ~first_mask;
    uint64_t full = (ma + mb == 64) ? ~uint64_t(0) : ((uint64_t(1) << (ma + mb)) - 1);
    fiber &= full;
    Ground out_ground = factor == Factor::first ? g->second() : g->first();
    Multivector r(out_ground);
    for (auto &[mask, c] : u.terms()) {
        if ((mask & fiber) != fiber)
            continue; // incomplete fiber degree
        uint64_t rest = mask & ~fiber;
        // Sign of rewriting the stored term as (rest) ^ (integrated block):
        // the coefficient of the fiber orientation class in the rear slot.
        // On even-dimensional fibers this equals the sign of sorting the
        // integrated block to the front; unlike that rule it keeps the
        // projection formula exact on odd-dimensional factors too.
        int sign = merge_sign(rest, fiber);
        uint64_t out_mask = factor == Factor::first ? (rest >> ma) : rest;
        r.add_term(out_mask, sign < 0 ? -c : c);
    }
    return r;
}

} // namespace mukai
