#include "mukai/orbit.hpp"

#include <algorithm>
#include <random>

namespace mukai {

PicBasis::PicBasis(const ModelSpec &spec) : model_(spec)
{
    for (int i = 0; i < spec.g; ++i)
        elems_.push_back({Elem::ns_diag, i, i});
    for (int i = 0; i < spec.g; ++i)
        for (int j = i + 1; j < spec.g; ++j) {
            elems_.push_back({Elem::ns_sym, i, j});
            if (spec.d > 0)
                elems_.push_back({Elem::ns_skew, i, j});
        }
    for (int i = 0; i < spec.g; ++i)
        for (int r = 0; r < spec.rho; ++r) {
            elems_.push_back({Elem::pic0_re, i, r});
            if (spec.d > 0)
                elems_.push_back({Elem::pic0_im, i, r});
        }
}

PicClass PicBasis::element(int index) const
{
    if (index < 0 || index >= size())
        throw Error("bad-index", "Pic basis index out of range");
    const Elem &e = elems_[static_cast<size_t>(index)];
    QuadMatrix ns(model_.g, model_.g, model_.d);
    QuadMatrix alg0(model_.g, model_.rho, model_.d);
    switch (e.kind) {
    case Elem::ns_diag:
        ns.at(e.i, e.i) = QuadScalar::one(model_.d);
        break;
    case Elem::ns_sym:
        ns.at(e.i, e.j) = QuadScalar::one(model_.d);
        ns.at(e.j, e.i) = QuadScalar::one(model_.d);
        break;
    case Elem::ns_skew:
        ns.at(e.i, e.j) = QuadScalar::omega(model_.d);
        ns.at(e.j, e.i) = -QuadScalar::omega(model_.d);
        break;
    case Elem::pic0_re:
        alg0.at(e.i, e.j) = QuadScalar::one(model_.d);
        break;
    case Elem::pic0_im:
        alg0.at(e.i, e.j) = QuadScalar::omega(model_.d);
        break;
    }
    return PicClass(HermClass(ns), Pic0Class(alg0));
}

std::string PicBasis::label(int index) const
{
    const Elem &e = elems_[static_cast<size_t>(index)];
    auto pair = [&](const char *name) {
        return std::string(name) + "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
               ")";
    };
    switch (e.kind) {
    case Elem::ns_diag:
    case Elem::ns_sym:
        return pair("h");
    case Elem::ns_skew:
        return pair("hw");
    case Elem::pic0_re:
        return pair("p");
    case Elem::pic0_im:
        return pair("pw");
    }
    return "?";
}

std::vector<Rational> PicBasis::coords(const PicClass &D) const
{
    if (D.g() != model_.g || D.rho() != model_.rho || D.disc() != model_.d)
        throw Error("bad-shape", "class does not match the basis model");
    std::vector<Rational> out;
    out.reserve(elems_.size());
    for (const Elem &e : elems_) {
        switch (e.kind) {
        case Elem::ns_diag:
            out.push_back(D.ns().matrix().at(e.i, e.i).re());
            break;
        case Elem::ns_sym:
            out.push_back(D.ns().matrix().at(e.i, e.j).re());
            break;
        case Elem::ns_skew:
            out.push_back(D.ns().matrix().at(e.i, e.j).im());
            break;
        case Elem::pic0_re:
            out.push_back(D.alg0().matrix().at(e.i, e.j).re());
            break;
        case Elem::pic0_im:
            out.push_back(D.alg0().matrix().at(e.i, e.j).im());
            break;
        }
    }
    return out;
}

bool GradedLexLess::operator()(const SymMonomial &a, const SymMonomial &b) const
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SymCycle::SymCycle(int degree_cap) : cap_(degree_cap)
{
    if (degree_cap < 1)
        throw Error("bad-model", "degree cap must be at least 1");
}

SymCycle SymCycle::one(int degree_cap)
{
    SymCycle c(degree_cap);
    c.terms_.emplace(SymMonomial{}, Rational(1));
    return c;
}

SymCycle SymCycle::variable(int degree_cap, int index)
{
    SymCycle c(degree_cap);
    c.terms_.emplace(SymMonomial{index}, Rational(1));
    return c;
}

const SymMonomial &SymCycle::leading_monomial() const
{
    if (terms_.empty())
        throw Error("zero-cycle", "the zero cycle has no leading monomial");
    return terms_.rbegin()->first;
}

const Rational &SymCycle::leading_coeff() const
{
    if (terms_.empty())
        throw Error("zero-cycle", "the zero cycle has no leading coefficient");
    return terms_.rbegin()->second;
}

int SymCycle::min_degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(terms_.begin()->first.size());
}

int SymCycle::max_degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

SymCycle SymCycle::component(int degree) const
{
    SymCycle out(cap_);
    for (auto &[mono, c] : terms_)
        if (static_cast<int>(mono.size()) == degree)
            out.terms_.emplace(mono, c);
    return out;
}

std::vector<int> SymCycle::degrees() const
{
    std::vector<int> out;
    for (auto &[mono, c] : terms_) {
        int deg = static_cast<int>(mono.size());
        if (out.empty() || out.back() != deg)
            out.push_back(deg);
    }
    return out;
}

void SymCycle::add_term(SymMonomial mono, const Rational &coeff)
{
    if (coeff.is_zero())
        return;
    if (static_cast<int>(mono.size()) > cap_)
        return; // beyond the truncation: identically zero
    if (!std::is_sorted(mono.begin(), mono.end()))
        std::sort(mono.begin(), mono.end());
    auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymCycle SymCycle::scaled(const Rational &r) const
{
    SymCycle out(cap_);
    if (r.is_zero())
        return out;
    for (auto &[mono, c] : terms_)
        out.terms_.emplace(mono, c * r);
    return out;
}

static void require_same_cap(const SymCycle &a, const SymCycle &b)
{
    if (a.degree_cap() != b.degree_cap())
        throw Error("bad-shape", "cycles carry different degree caps");
}

SymCycle operator+(const SymCycle &a, const SymCycle &b)
{
    require_same_cap(a, b);
    SymCycle r = a;
    for (auto &[mono, c] : b.terms_)
        r.add_term(mono, c);
    return r;
}

SymCycle operator-(const SymCycle &a, const SymCycle &b)
{
    require_same_cap(a, b);
    SymCycle r = a;
    for (auto &[mono, c] : b.terms_)
        r.add_term(mono, -c);
    return r;
}

SymCycle operator*(const SymCycle &a, const SymCycle &b)
{
    require_same_cap(a, b);
    SymCycle r(a.cap_);
    for (auto &[ma, ca] : a.terms_) {
        for (auto &[mb, cb] : b.terms_) {
            if (static_cast<int>(ma.size() + mb.size()) > a.cap_)
                continue;
            SymMonomial mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
            r.add_term(std::move(mono), ca * cb);
        }
    }
    return r;
}

SymCycle pow(const SymCycle &base, int exponent)
{
    if (exponent < 0)
        throw Error("bad-exponent", "cycle powers need a non-negative exponent");
    SymCycle r = SymCycle::one(base.degree_cap());
    for (int i = 0; i < exponent; ++i)
        r = r * base;
    return r;
}

std::string SymCycle::str(const PicBasis &basis) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    // print leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational &c = it->second;
        if (first) {
            if (c.sign() < 0)
                out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational a = c.abs();
        std::string mono;
        size_t i = 0;
        while (i < it->first.size()) {
            size_t j = i;
            while (j < it->first.size() && it->first[j] == it->first[i])
                ++j;
            if (!mono.empty())
                mono += "*";
            mono += basis.label(it->first[i]);
            if (j - i > 1)
                mono += "^" + std::to_string(j - i);
            i = j;
        }
        if (mono.empty())
            out += a.str();
        else if (a.is_one())
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out;
}

SymCycle expand_class(const PicClass &D, const PicBasis &basis, int degree_cap)
{
    SymCycle out(degree_cap);
    std::vector<Rational> coeffs = basis.coords(D);
    for (int i = 0; i < basis.size(); ++i)
        out.add_term(SymMonomial{i}, coeffs[static_cast<size_t>(i)]);
    return out;
}

namespace {

/// Degree-1 images of every basis variable under h^*, precomputed once.
class SymLinearMap {
public:
    SymLinearMap(const AffineEndo &h, const PicBasis &basis)
    {
        images_.reserve(static_cast<size_t>(basis.size()));
        for (int v = 0; v < basis.size(); ++v) {
            std::vector<Rational> coords = basis.coords(affine_pullback(h, basis.element(v)));
            std::vector<std::pair<int, Rational>> sparse;
            for (int i = 0; i < basis.size(); ++i)
                if (!coords[static_cast<size_t>(i)].is_zero())
                    sparse.emplace_back(i, coords[static_cast<size_t>(i)]);
            images_.push_back(std::move(sparse));
        }
    }

    SymCycle apply(const SymCycle &x) const
    {
        SymCycle out(x.degree_cap());
        for (auto &[mono, c] : x.terms()) {
            SymCycle acc = SymCycle::one(x.degree_cap()).scaled(c);
            for (int v : mono) {
                SymCycle img(x.degree_cap());
                for (auto &[i, q] : images_[static_cast<size_t>(v)])
                    img.add_term(SymMonomial{i}, q);
                acc = acc * img;
                if (acc.is_zero())
                    break;
            }
            out = out + acc;
        }
        return out;
    }

private:
    std::vector<std::vector<std::pair<int, Rational>>> images_;
};

} // namespace

SymCycle sym_pullback(const AffineEndo &h, const SymCycle &x, const PicBasis &basis)
{
    if (h.F.g() != basis.model().g || h.F.disc() != basis.model().d ||
        h.c.matrix().cols() != basis.model().rho)
        throw Error("bad-shape", "affine map does not match the basis model");
    return SymLinearMap(h, basis).apply(x);
}

SymCycle EchelonBasis::reduce(SymCycle v) const
{
    // rows are RREF-sorted descending, so one pass eliminates every pivot
    for (const SymCycle &row : rows_) {
        if (v.is_zero())
            break;
        auto it = v.terms().find(row.leading_monomial());
        if (it == v.terms().end())
            continue;
        v = v - row.scaled(it->second);
    }
    return v;
}

std::optional<SymCycle> EchelonBasis::insert(const SymCycle &v)
{
    SymCycle rem = reduce(v);
    if (rem.is_zero())
        return std::nullopt;
    rem = rem.scaled(rem.leading_coeff().inverse());
    // back-substitute the new pivot out of the existing rows
    for (SymCycle &row : rows_) {
        auto it = row.terms().find(rem.leading_monomial());
        if (it != row.terms().end())
            row = row - rem.scaled(it->second);
    }
    GradedLexLess less;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), rem,
                                [&](const SymCycle &a, const SymCycle &b) {
                                    return less(b.leading_monomial(), a.leading_monomial());
                                });
    rows_.insert(pos, rem);
    return rem;
}

unsigned long long ambient_symmetric_dimension(int k, int cap)
{
    const unsigned long long kMax = ~0ull;
    unsigned long long total = 0;
    for (int n = 0; n <= cap; ++n) {
        // C(k + n - 1, n)
        unsigned __int128 b = 1;
        for (int i = 1; i <= n; ++i) {
            b = b * static_cast<unsigned>(k - 1 + i) / static_cast<unsigned>(i);
            if (b > kMax)
                return kMax;
        }
        if (total > kMax - static_cast<unsigned long long>(b))
            return kMax;
        total += static_cast<unsigned long long>(b);
    }
    return total;
}

static std::vector<AffineEndo> generator_letters(const GeneratorSet &gens)
{
    std::vector<AffineEndo> letters;
    for (const Endo &f : gens.endos)
        letters.push_back({f, Point::zero(gens.model.g, gens.model.rho, gens.model.d)});
    for (const Point &a : gens.points)
        letters.push_back({Endo::identity(gens.model.g, gens.model.d), a});
    return letters;
}

OrbitReport orbit_span(const GeneratorSet &gens, const SymCycle &x, long max_rounds)
{
    if (x.is_zero())
        throw Error("zero-cycle", "orbit span of the zero cycle");
    if (max_rounds < 1)
        throw Error("bad-rounds", "max_rounds must be at least 1");
    PicBasis basis(gens.model);
    std::vector<SymLinearMap> letters;
    for (const AffineEndo &h : generator_letters(gens))
        letters.emplace_back(h, basis);

    OrbitReport report;
    EchelonBasis ech;
    std::vector<SymCycle> work;
    for (int deg : x.degrees())
        if (auto row = ech.insert(x.component(deg)))
            work.push_back(*row);

    while (!work.empty() && report.rounds < max_rounds) {
        ++report.rounds;
        std::vector<SymCycle> next;
        for (const SymCycle &v : work) {
            for (const SymLinearMap &map : letters) {
                SymCycle image = map.apply(v);
                ++report.generators_applied;
                if (auto row = ech.insert(image))
                    next.push_back(std::move(*row));
            }
        }
        work = std::move(next);
    }
    report.converged = work.empty();
    report.dimension = ech.dimension();
    report.basis = ech.rows();
    return report;
}

CertificateReport orbit_certificate(const GeneratorSet &gens, const SymCycle &x,
                                    const OrbitReport &report, int words, int max_len,
                                    uint64_t seed)
{
    PicBasis basis(gens.model);
    EchelonBasis ech;
    for (const SymCycle &row : report.basis)
        ech.insert(row);

    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };

    CertificateReport cert;
    cert.words = words;
    int n_endos = static_cast<int>(gens.endos.size());
    int n_points = static_cast<int>(gens.points.size());
    if (n_endos + n_points == 0) {
        // only the empty word exists; x itself is in its own span
        cert.in_span = words;
        cert.all_in_span = ech.contains(x);
        return cert;
    }
    for (int w = 0; w < words; ++w) {
        long len = pick(1, max_len);
        SymCycle image = x;
        for (long i = 0; i < len; ++i) {
            WordLetter letter{};
            int choice = static_cast<int>(pick(0, n_endos + n_points - 1));
            if (choice < n_endos) {
                letter.is_endo = true;
                letter.index = choice;
                letter.exponent = pick(1, 3);
            } else {
                letter.is_endo = false;
                letter.index = choice - n_endos;
                letter.exponent = pick(-3, 3);
            }
            image = sym_pullback(letter_affine(letter, gens), image, basis);
        }
        if (ech.contains(image))
            ++cert.in_span;
    }
    cert.all_in_span = cert.in_span == cert.words;
    return cert;
}

Step3Report step3_pipeline(const GeneratorSet &gens, long max_rounds)
{
    const ModelSpec &base = gens.model;
    ModelSpec product(2 * base.g, base.d, base.rho);
    int cap = 2 * base.g; // products on A x A-dual vanish past its dimension

    // Poincare divisor class on E^{2g}: the [[0, I], [I, 0]] Hermitian block.
    QuadMatrix block(product.g, product.g, product.d);
    for (int i = 0; i < base.g; ++i) {
        block.at(i, base.g + i) = QuadScalar::one(product.d);
        block.at(base.g + i, i) = QuadScalar::one(product.d);
    }
    PicClass poincare = ns_lift(HermClass(block), product.rho);

    // lift f to f x Id, and a translation by a to one by (-a, 0)
    std::vector<Endo> lifted_endos;
    for (const Endo &f : gens.endos) {
        QuadMatrix m = QuadMatrix::identity(product.g, product.d);
        for (int i = 0; i < base.g; ++i)
            for (int j = 0; j < base.g; ++j)
                m.at(i, j) = f.matrix().at(i, j);
        lifted_endos.push_back(Endo(m));
    }
    std::vector<Point> lifted_points;
    for (const Point &a : gens.points) {
        QuadMatrix m(product.g, product.rho, product.d);
        for (int i = 0; i < base.g; ++i)
            for (int r = 0; r < base.rho; ++r)
                m.at(i, r) = -a.matrix().at(i, r);
        lifted_points.push_back(Point(m));
    }
    GeneratorSet lifted(product, std::move(lifted_endos), std::move(lifted_points));

    PicBasis basis(product);
    long rounds = max_rounds > 0
                      ? max_rounds
                      : static_cast<long>(std::min<unsigned long long>(
                            ambient_symmetric_dimension(basis.size(), cap) + 1, 1u << 30));

    SymCycle l_cycle = expand_class(poincare, basis, cap);
    Step3Report report{base,
                       product,
                       cap,
                       poincare,
                       orbit_span(lifted, l_cycle, rounds),
                       {},
                       false};
    report.converged = report.l_span.converged;

    unsigned long long dim_v = static_cast<unsigned long long>(report.l_span.dimension);
    for (int n = 1; n <= cap; ++n) {
        OrbitReport power = orbit_span(lifted, pow(l_cycle, n), rounds);
        unsigned long long bound = 1;
        for (int i = 1; i <= n; ++i)
            bound = bound * (dim_v + static_cast<unsigned long long>(i) - 1) /
                    static_cast<unsigned long long>(i);
        report.powers.push_back({n, bound, power.dimension,
                                 static_cast<unsigned long long>(power.dimension) <= bound});
        report.converged = report.converged && power.converged;
    }
    return report;
}

} // namespace mukai
