#include "orenil/errors.hpp"
#include "orenil/rational.hpp"

#include <doctest.h>

#include <random>

using namespace orenil;

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-4/8").str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::from_string("7").str() == "7");
    CHECK(Rational(5).denominator() == 1);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    for (int i = 0; i < 200; ++i) {
        const Rational r(num(rng), (rng() % 2 ? 1 : -1) * den(rng));
        CHECK(r.denominator() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
                r.denominator().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(23, 5) == Rational(46, 15));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("abc"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(9, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(40, 20) == Rational::from_string("137846528820"));
}

TEST_CASE("generalized binomial extends to negative upper index") {
    for (unsigned long i = 0; i <= 6; ++i) {
        CHECK(generalized_binomial(-1, i) ==
              (i % 2 == 0 ? Rational(1) : Rational(-1)));
        CHECK(generalized_binomial(4, i) == binomial(4, i));
    }
    CHECK(generalized_binomial(-2, 3) == Rational(-4));
    CHECK(generalized_binomial(-3, 2) == Rational(6));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
}
