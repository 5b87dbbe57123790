#pragma once

#include <string>
#include <vector>

#include "mukai/picard.hpp"

namespace mukai {

/// Declared generators of a semigroup acting on A = E^g: group
/// endomorphisms plus the translation points of its affine part. Words
/// refer to generators by (stable) index. May be empty: the generated
/// semigroup is then trivial and orbits reduce to the starting cycle.
struct GeneratorSet {
    ModelSpec model;
    std::vector<Endo> endos;
    std::vector<Point> points;

    GeneratorSet(ModelSpec model, std::vector<Endo> endos, std::vector<Point> points);
};

/// One letter of a word: an endomorphism generator raised to a positive
/// exponent, or a translation generator raised to any integer exponent.
/// Indices are 0-based into the GeneratorSet.
struct WordLetter {
    bool is_endo;
    int index;
    long long exponent;

    friend bool operator==(const WordLetter &a, const WordLetter &b)
    {
        return a.is_endo == b.is_endo && a.index == b.index && a.exponent == b.exponent;
    }
};

/// Composition word, written outermost first: letters[0] acts last on
/// points, hence its pullback is applied first.
struct Word {
    std::vector<WordLetter> letters;

    friend bool operator==(const Word &a, const Word &b) { return a.letters == b.letters; }
};

/// Normal form (F, c) of the morphism x |-> F(x) + c, i.e. t_c after F.
/// Composition: (F1, c1) o (F2, c2) = (F1 F2, F1 c2 + c1).
struct AffineEndo {
    Endo F;
    Point c;

    friend bool operator==(const AffineEndo &a, const AffineEndo &b)
    {
        return a.F == b.F && a.c == b.c;
    }
    friend bool operator!=(const AffineEndo &a, const AffineEndo &b) { return !(a == b); }
};

AffineEndo affine_identity(const ModelSpec &spec);
AffineEndo compose(const AffineEndo &outer, const AffineEndo &inner);

/// The affine form of a single letter: (f^k, 0) for an endo letter,
/// (id, k*a) for a translation letter.
AffineEndo letter_affine(const WordLetter &letter, const GeneratorSet &gens);

/// Folds a word into its affine normal form via f o t_a = t_{f(a)} o f.
/// Two words with equal normal forms act identically on every class.
AffineEndo normalize(const Word &w, const GeneratorSet &gens);

/// (t_c o F)^* = F^* o t_c^*; in closed form (F' N F, F' c_D + F' N c)
/// with F' the Rosati adjoint.
PicClass affine_pullback(const AffineEndo &h, const PicClass &D);

/// Letter-by-letter pullback oracle: applies each letter's pullback in
/// written order (outermost letter first), one primitive step at a time.
/// Always equals affine_pullback(normalize(w), D).
PicClass word_pullback(const Word &w, const GeneratorSet &gens, const PicClass &D);

/// The declared translation points: every expressible word has the affine
/// normal form over these, by construction of the model.
std::vector<Point> aa_witness(const GeneratorSet &gens);

/// Parses the CLI word syntax: whitespace-separated letters `e<i>` and
/// `t<i>^<k>` with 1-based generator indices; `^<k>` optional (default 1)
/// and allowed on endo letters with k >= 1.
Word parse_word(const std::string &text);

std::string word_str(const Word &w);

} // namespace mukai
