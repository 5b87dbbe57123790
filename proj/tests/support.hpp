#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "mukai/fourier.hpp"
#include "mukai/orbit.hpp"
#include "mukai/scenario.hpp"

namespace mukai::testkit {

/// Seeded generator for property-style tests; every run is deterministic.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }

    Rational rational() { return Rational(integer(-6, 6), integer(1, 4)); }

    Rational nonzero_rational()
    {
        Rational r = rational();
        while (r.is_zero())
            r = rational();
        return r;
    }

    QuadScalar quad(int d)
    {
        return QuadScalar(rational(), d > 0 ? rational() : Rational(0), d);
    }

    QuadScalar nonzero_quad(int d)
    {
        QuadScalar q = quad(d);
        while (q.is_zero())
            q = quad(d);
        return q;
    }

    QuadMatrix matrix(int rows, int cols, int d)
    {
        QuadMatrix m(rows, cols, d);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = quad(d);
        return m;
    }

    HermClass herm(int g, int d)
    {
        QuadMatrix m(g, g, d);
        for (int i = 0; i < g; ++i) {
            m.at(i, i) = QuadScalar::rational(rational(), d);
            for (int j = i + 1; j < g; ++j) {
                QuadScalar q = quad(d);
                m.at(i, j) = q;
                m.at(j, i) = q.conj();
            }
        }
        return HermClass(std::move(m));
    }

    PicClass pic_class(const ModelSpec &spec)
    {
        return PicClass(herm(spec.g, spec.d), Pic0Class(matrix(spec.g, spec.rho, spec.d)));
    }

    Endo endo(const ModelSpec &spec) { return Endo(matrix(spec.g, spec.g, spec.d)); }

    Point point(const ModelSpec &spec)
    {
        return Point(matrix(spec.g, spec.rho, spec.d));
    }

    uint64_t mask(int dim) { return eng() & ((uint64_t(1) << dim) - 1); }

    uint64_t mask_of_degree(int dim, int degree)
    {
        std::vector<int> idx(static_cast<size_t>(dim));
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), eng);
        uint64_t m = 0;
        for (int k = 0; k < degree; ++k)
            m |= uint64_t(1) << idx[static_cast<size_t>(k)];
        return m;
    }

    Multivector multivector(const Ground &ground, int max_terms)
    {
        Multivector u(ground);
        long n = integer(1, max_terms);
        for (long k = 0; k < n; ++k)
            u.add_term(mask(ground->dim()), rational());
        return u;
    }

    Multivector homogeneous(const Ground &ground, int degree, int max_terms)
    {
        Multivector u(ground);
        long n = integer(1, max_terms);
        for (long k = 0; k < n; ++k)
            u.add_term(mask_of_degree(ground->dim(), degree), rational());
        return u;
    }

    LinearSubstitution subst(const Ground &ground)
    {
        int m = ground->dim();
        std::vector<std::vector<Rational>> mat(static_cast<size_t>(m));
        for (auto &row : mat) {
            row.reserve(static_cast<size_t>(m));
            for (int j = 0; j < m; ++j)
                row.push_back(rational());
        }
        return LinearSubstitution(ground, std::move(mat));
    }

    WordLetter letter(const GeneratorSet &gens)
    {
        int n_endos = static_cast<int>(gens.endos.size());
        int n_points = static_cast<int>(gens.points.size());
        int choice = static_cast<int>(integer(0, n_endos + n_points - 1));
        WordLetter out{};
        if (choice < n_endos) {
            out.is_endo = true;
            out.index = choice;
            out.exponent = integer(1, 3);
        } else {
            out.is_endo = false;
            out.index = choice - n_endos;
            out.exponent = integer(-3, 3);
        }
        return out;
    }

    Word word(const GeneratorSet &gens, int max_len)
    {
        Word w;
        long len = integer(1, max_len);
        for (long i = 0; i < len; ++i)
            w.letters.push_back(letter(gens));
        return w;
    }
};

} // namespace mukai::testkit
