#include "mukai/semigroup.hpp"

#include <sstream>

namespace mukai {

GeneratorSet::GeneratorSet(ModelSpec model_, std::vector<Endo> endos_, std::vector<Point> points_)
    : model(model_), endos(std::move(endos_)), points(std::move(points_))
{
    for (const auto &f : endos)
        if (f.g() != model.g || f.disc() != model.d)
            throw Error("bad-shape", "endomorphism generator does not match the model");
    for (const auto &a : points)
        if (a.matrix().rows() != model.g || a.matrix().cols() != model.rho ||
            a.matrix().disc() != model.d)
            throw Error("bad-shape", "translation generator does not match the model");
}

AffineEndo affine_identity(const ModelSpec &spec)
{
    return {Endo::identity(spec.g, spec.d), Point::zero(spec.g, spec.rho, spec.d)};
}

AffineEndo compose(const AffineEndo &outer, const AffineEndo &inner)
{
    return {outer.F * inner.F, Point(outer.F.matrix() * inner.c.matrix()) + outer.c};
}

static const Endo &endo_at(const GeneratorSet &gens, int index)
{
    if (index < 0 || index >= static_cast<int>(gens.endos.size()))
        throw Error("bad-index", "endomorphism generator index " + std::to_string(index + 1) +
                                     " out of range");
    return gens.endos[static_cast<size_t>(index)];
}

static const Point &point_at(const GeneratorSet &gens, int index)
{
    if (index < 0 || index >= static_cast<int>(gens.points.size()))
        throw Error("bad-index", "translation generator index " + std::to_string(index + 1) +
                                     " out of range");
    return gens.points[static_cast<size_t>(index)];
}

AffineEndo letter_affine(const WordLetter &letter, const GeneratorSet &gens)
{
    if (letter.is_endo) {
        if (letter.exponent < 1)
            throw Error("bad-exponent", "endomorphism letters need a positive exponent");
        const Endo &f = endo_at(gens, letter.index);
        Endo power = Endo::identity(gens.model.g, gens.model.d);
        for (long long i = 0; i < letter.exponent; ++i)
            power = power * f;
        return {power, Point::zero(gens.model.g, gens.model.rho, gens.model.d)};
    }
    const Point &a = point_at(gens, letter.index);
    return {Endo::identity(gens.model.g, gens.model.d),
            a.scaled(Rational(static_cast<long>(letter.exponent)))};
}

AffineEndo normalize(const Word &w, const GeneratorSet &gens)
{
    AffineEndo acc = affine_identity(gens.model);
    for (const auto &letter : w.letters)
        acc = compose(acc, letter_affine(letter, gens));
    return acc;
}

PicClass affine_pullback(const AffineEndo &h, const PicClass &D)
{
    return endo_pullback(h.F, translate_pullback(h.c, D));
}

PicClass word_pullback(const Word &w, const GeneratorSet &gens, const PicClass &D)
{
    PicClass acc = D;
    for (const auto &letter : w.letters) {
        if (letter.is_endo) {
            if (letter.exponent < 1)
                throw Error("bad-exponent", "endomorphism letters need a positive exponent");
            const Endo &f = endo_at(gens, letter.index);
            for (long long i = 0; i < letter.exponent; ++i)
                acc = endo_pullback(f, acc);
        } else {
            const Point &a = point_at(gens, letter.index);
            Point step = letter.exponent >= 0 ? a : -a;
            long long reps = letter.exponent >= 0 ? letter.exponent : -letter.exponent;
            for (long long i = 0; i < reps; ++i)
                acc = translate_pullback(step, acc);
        }
    }
    return acc;
}

std::vector<Point> aa_witness(const GeneratorSet &gens)
{
    return gens.points;
}

Word parse_word(const std::string &text)
{
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        WordLetter letter{};
        if (token[0] == 'e')
            letter.is_endo = true;
        else if (token[0] == 't')
            letter.is_endo = false;
        else
            throw Error("parse", "word letter must start with 'e' or 't': '" + token + "'");
        size_t pos = 1;
        size_t caret = token.find('^');
        std::string index_part = token.substr(pos, caret == std::string::npos ? std::string::npos
                                                                              : caret - pos);
        if (index_part.empty() ||
            index_part.find_first_not_of("0123456789") != std::string::npos)
            throw Error("parse", "bad generator index in word letter '" + token + "'");
        letter.index = std::stoi(index_part) - 1; // CLI indices are 1-based
        if (letter.index < 0)
            throw Error("parse", "generator indices start at 1: '" + token + "'");
        if (caret == std::string::npos) {
            letter.exponent = 1;
        } else {
            std::string exp_part = token.substr(caret + 1);
            try {
                size_t used = 0;
                letter.exponent = std::stoll(exp_part, &used);
                if (used != exp_part.size())
                    throw std::invalid_argument(exp_part);
            } catch (const std::exception &) {
                throw Error("parse", "bad exponent in word letter '" + token + "'");
            }
        }
        if (letter.is_endo && letter.exponent < 1)
            throw Error("bad-exponent",
                        "endomorphism letters need a positive exponent: '" + token + "'");
        w.letters.push_back(letter);
    }
    return w;
}

std::string word_str(const Word &w)
{
    std::string out;
    for (const auto &letter : w.letters) {
        if (!out.empty())
            out += " ";
        out += letter.is_endo ? "e" : "t";
        out += std::to_string(letter.index + 1);
        if (letter.exponent != 1)
            out += "^" + std::to_string(letter.exponent);
    }
    return out;
}

} // namespace mukai
