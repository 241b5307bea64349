#include "orenil/errors.hpp"
#include "orenil/quasi_inverse.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace orenil;
using orenil::test::HeisenbergFixture;

namespace {

OrePoly mono(const HeisenbergFixture &h, const AlgebraElement &c,
             std::int64_t e) {
    return OrePoly::monomial(c, e, h.d);
}

OrePoly p7_x3(const HeisenbergFixture &h) {
    return mono(h, h.a, 3) + mono(h, h.w.scaled(Rational(7)), 2);
}

} // namespace

TEST_CASE("square-zero elements are their own quasi-inverse") {
    const HeisenbergFixture h;
    const OrePoly r = mono(h, h.w, 1);
    const auto result = quasi_inverse_nilpotent(r, 8);
    CHECK(result.nil_index == 2);
    CHECK(result.inverse == r);
    CHECK(verify_quasi_inverse(r, result.inverse));
}

TEST_CASE("quasi-inverse of P_7 x^3 on the Heisenberg instance") {
    const HeisenbergFixture h;
    const OrePoly r = p7_x3(h);
    const auto result = quasi_inverse_nilpotent(r, 32);
    CHECK(result.nil_index == 3);
    const OrePoly expected = mono(h, h.a, 3) +
                             mono(h, h.w.scaled(Rational(7)), 2) +
                             mono(h, h.w, 6);
    CHECK(result.inverse == expected);
    CHECK(result.inverse.degree() == 6);
}

TEST_CASE("zero has quasi-inverse zero") {
    const HeisenbergFixture h;
    const auto result = quasi_inverse_nilpotent(OrePoly::zero(h.alg, h.d), 8);
    CHECK(result.nil_index == 1);
    CHECK(result.inverse.is_zero());
    CHECK(verify_quasi_inverse(result.element, result.inverse));
}

TEST_CASE("verify_quasi_inverse rejects perturbed candidates") {
    const HeisenbergFixture h;
    const OrePoly r = p7_x3(h);
    const OrePoly good = quasi_inverse_nilpotent(r, 32).inverse;
    // dropping the w x^6 term breaks both identities
    const OrePoly bad = good - mono(h, h.w, 6);
    CHECK_FALSE(verify_quasi_inverse(r, bad));
    CHECK(verify_quasi_inverse(OrePoly::zero(h.alg, h.d),
                               OrePoly::zero(h.alg, h.d)));
}

TEST_CASE("uniqueness across computation orders") {
    const HeisenbergFixture h;
    std::mt19937 rng(53);
    for (int i = 0; i < 20; ++i) {
        const OrePoly r = orenil::test::random_ore_poly(rng, h.alg, h.d, 0, 4);
        const auto result = quasi_inverse_nilpotent(r, 32);

        // Horner-style accumulation: s <- r + r s, repeated
        OrePoly horner = r;
        for (unsigned j = 2; j < result.nil_index; ++j)
            horner = r + ore_mul(r, horner);

        // series conjugated out and back
        const OrePoly roundtrip = conjugate_poly(
            quasi_inverse_nilpotent(conjugate_poly(r, 1), 32).inverse, -1);

        CHECK(check_uniqueness(r, {result.inverse, horner, roundtrip}));
    }
}

TEST_CASE("check_uniqueness validates its precondition") {
    const HeisenbergFixture h;
    const OrePoly r = p7_x3(h);
    const OrePoly good = quasi_inverse_nilpotent(r, 32).inverse;
    CHECK(check_uniqueness(r, {good}));
    CHECK_THROWS_AS(check_uniqueness(r, {good, good - mono(h, h.w, 6)}),
                    PreconditionViolated);
}

TEST_CASE("conjugated quasi-inverse keeps the degree") {
    const HeisenbergFixture h;
    const OrePoly r = p7_x3(h);
    const auto direct = quasi_inverse_nilpotent(r, 32);
    for (unsigned i = 1; i <= 3; ++i) {
        const auto conjugated = conjugated_quasi_inverse(i, r, 32);
        CHECK(conjugated.inverse.degree() == direct.inverse.degree());
        CHECK(verify_quasi_inverse(conjugated.element, conjugated.inverse));
    }

    // a = v: P_9 x^3 = v x^3 + 9 w x^2 squares to zero
    const OrePoly r9 = mono(h, h.v, 3) + mono(h, h.w.scaled(Rational(9)), 2);
    CHECK(quasi_inverse_nilpotent(r9, 32).nil_index == 2);
    const auto conj2 = conjugated_quasi_inverse(2, r9, 32);
    CHECK(conj2.inverse.degree() ==
          quasi_inverse_nilpotent(r9, 32).inverse.degree());

    // zero stays zero under conjugation
    const auto zero = conjugated_quasi_inverse(4, OrePoly::zero(h.alg, h.d), 8);
    CHECK(zero.inverse.is_zero());
    CHECK_FALSE(zero.inverse.degree().has_value());
}

TEST_CASE("the series telescopes: r^M T = T - sum of the first M powers") {
    const HeisenbergFixture h;
    const OrePoly r = p7_x3(h);
    const auto result = quasi_inverse_nilpotent(r, 32);
    OrePoly partial = OrePoly::zero(h.alg, h.d);
    OrePoly pw = r;
    for (unsigned m = 1; m <= result.nil_index; ++m) {
        partial = partial + pw;
        CHECK(ore_mul(pw, result.inverse) == result.inverse - partial);
        pw = ore_mul(pw, r);
    }
}

TEST_CASE("non-nilpotent elements are reported") {
    std::vector<std::vector<QVec>> table(
        1, std::vector<QVec>(1, QVec(1, Rational(1))));
    const AlgebraPtr idem = make_algebra(1, table, {"e"});
    const auto d0 = make_derivation(idem, QMat(1, QVec(1, Rational(0))));
    const OrePoly e = OrePoly::constant(idem->basis(0), d0);
    CHECK_THROWS_AS(quasi_inverse_nilpotent(e, 10), NotNilpotentWithinBound);
}
