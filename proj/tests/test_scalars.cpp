#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace mukai;
using mukai::testkit::Rng;

TEST_CASE("rationals stay canonical", "[scalars]")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-9, 3).str() == "-3");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
    CHECK_THROWS_AS(Rational::from_string("1/x"), Error);
}

TEST_CASE("quadratic scalar arithmetic", "[scalars]")
{
    // d = 1: (1 + w)(1 - w) = 1 - w^2 = 2
    QuadScalar a(Rational(1), Rational(1), 1);
    QuadScalar b(Rational(1), Rational(-1), 1);
    CHECK(a * b == QuadScalar::rational(Rational(2), 1));

    // d = 2: w * w = -2
    QuadScalar w2 = QuadScalar::omega(2);
    CHECK(w2 * w2 == QuadScalar::rational(Rational(-2), 2));

    Rng rng(101);
    for (int d : {0, 1, 2, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            QuadScalar x = rng.quad(d);
            CHECK(x * QuadScalar::one(d) == x);
        }
    }
}

TEST_CASE("conjugation", "[scalars]")
{
    QuadScalar x(Rational(3), Rational(0), 1);
    CHECK(x.conj() == x);
    QuadScalar y(Rational(1), Rational(2), 1);
    CHECK(y.conj() == QuadScalar(Rational(1), Rational(-2), 1));
    CHECK(y.conj().conj() == y);
}

TEST_CASE("ring axioms hold exactly", "[scalars]")
{
    Rng rng(202);
    for (int d : {0, 1, 3}) {
        for (int trial = 0; trial < 80; ++trial) {
            QuadScalar x = rng.quad(d), y = rng.quad(d), z = rng.quad(d);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK((x * y).conj() == x.conj() * y.conj());
        }
    }
}

TEST_CASE("norm positivity", "[scalars]")
{
    Rng rng(303);
    for (int d : {0, 1, 2, 7}) {
        for (int trial = 0; trial < 60; ++trial) {
            QuadScalar x = rng.nonzero_quad(d);
            QuadScalar n = x * x.conj();
            CHECK(n.re().sign() > 0);
            CHECK(n.im().is_zero());
            CHECK(n.re() == x.norm());
            CHECK(x * x.inverse() == QuadScalar::one(d));
        }
    }
}

TEST_CASE("discriminants must match", "[scalars]")
{
    QuadScalar x = QuadScalar::omega(1);
    QuadScalar y = QuadScalar::omega(2);
    CHECK_THROWS_AS(x * y, Error);
    CHECK_THROWS_AS(x + y, Error);
    try {
        (void)(x * y);
        FAIL("expected a discriminant mismatch");
    } catch (const Error &e) {
        CHECK(e.code() == "discriminant-mismatch");
    }
}

TEST_CASE("trivial quadratic part rejects w", "[scalars]")
{
    try {
        QuadScalar bad(Rational(1), Rational(1), 0);
        FAIL("expected rejection");
    } catch (const Error &e) {
        CHECK(e.code() == "d-mismatch");
    }
}

TEST_CASE("squarefree check", "[scalars]")
{
    CHECK(is_squarefree(0));
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(6));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(4));
    CHECK_FALSE(is_squarefree(12));
    CHECK_FALSE(is_squarefree(-1));
}
