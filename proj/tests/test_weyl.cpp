#include "orenil/errors.hpp"
#include "orenil/weyl.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace orenil;
using orenil::test::HeisenbergFixture;

namespace {

UnitalElement scalar_one(const AlgebraPtr &alg) {
    return {Rational(1), alg->zero()};
}

UnitalElement ring_coeff(const AlgebraElement &x) { return {Rational(0), x}; }

} // namespace

TEST_CASE("the Weyl relation X Y = Y X + 1") {
    const HeisenbergFixture h;
    const BiOrePoly x = BiOrePoly::x_monomial(h.alg);
    const BiOrePoly y = BiOrePoly::y_monomial(h.alg);
    const BiOrePoly expected =
        BiOrePoly::monomial(scalar_one(h.alg), 1, 1) +
        BiOrePoly::monomial(scalar_one(h.alg), 0, 0);
    CHECK(bi_ore_mul(x, y) == expected);
    // Y X has no correction term
    CHECK(bi_ore_mul(y, x) == BiOrePoly::monomial(scalar_one(h.alg), 1, 1));
}

TEST_CASE("embedding of Heisenberg elements") {
    const HeisenbergFixture h;
    CHECK(embed_weyl(h.v, h.d) ==
          BiOrePoly::monomial(ring_coeff(h.v), 0, 0) +
              BiOrePoly::monomial(ring_coeff(h.w), 1, 0));
    CHECK(embed_weyl(h.a, h.d) ==
          BiOrePoly::monomial(ring_coeff(h.a), 0, 0) +
              BiOrePoly::monomial(ring_coeff(h.w), 1, 0));
    CHECK(embed_weyl(h.w, h.d) == BiOrePoly::monomial(ring_coeff(h.w), 0, 0));

    // (v + wY)^2 = 0 since v^2 = vw = wv = w^2 = 0 and Y is central over R
    const BiOrePoly ev = embed_weyl(h.v, h.d);
    CHECK(bi_ore_mul(ev, ev).is_zero());
    CHECK(bi_ore_mul(ev, BiOrePoly::zero(h.alg)).is_zero());
}

TEST_CASE("factorial scaling of the embedding") {
    // On the free algebra with d = inner(a): d^2(b) = aab - 2 aba + baa != 0,
    // so the Y^2 coefficient must carry the 1/2! factor.
    const AlgebraPtr alg = free_nilpotent_algebra(2, 3);
    const auto gen_a = alg->basis(0), gen_b = alg->basis(1);
    const auto d = inner_derivation(gen_a);
    const auto d2b = d->apply(d->apply(gen_b));
    REQUIRE_FALSE(d2b.is_zero());
    const BiOrePoly eb = embed_weyl(gen_b, d);
    const auto it = eb.terms().find({2, 0});
    REQUIRE(it != eb.terms().end());
    CHECK(it->second == ring_coeff(d2b.scaled(Rational(1, 2))));
}

TEST_CASE("embedding is multiplicative and preserves the relation") {
    std::mt19937 rng(41);
    const HeisenbergFixture h;
    const AlgebraPtr fn = free_nilpotent_algebra(2, 3);
    const auto fn_d = inner_derivation(orenil::test::random_element(rng, fn));
    struct Case {
        AlgebraPtr alg;
        DerivationPtr d;
    } cases[] = {{h.alg, h.d}, {fn, fn_d}};
    for (const auto &c : cases) {
        const BiOrePoly x = embed_weyl_x(c.alg);
        for (int i = 0; i < 15; ++i) {
            const auto a = orenil::test::random_element(rng, c.alg);
            const auto b = orenil::test::random_element(rng, c.alg);
            CHECK(embed_weyl(mul_elements(a, b), c.d) ==
                  bi_ore_mul(embed_weyl(a, c.d), embed_weyl(b, c.d)));
            const BiOrePoly relation = bi_ore_mul(x, embed_weyl(a, c.d)) -
                                       bi_ore_mul(embed_weyl(a, c.d), x) -
                                       embed_weyl(c.d->apply(a), c.d);
            CHECK(relation.is_zero());
        }
    }
}

TEST_CASE("embedding the normal form of x a") {
    const HeisenbergFixture h;
    // x v = v x + d(v) in R[x;d]; its image must be X * embed(v).
    const OrePoly xv = commute_power(1, h.v, h.d);
    CHECK(embed_ore_poly(xv) ==
          bi_ore_mul(embed_weyl_x(h.alg), embed_weyl(h.v, h.d)));
    CHECK_THROWS_AS(embed_ore_poly(OrePoly::monomial(h.v, -1, h.d)), Error);
}

TEST_CASE("embedding requires a terminating orbit") {
    std::vector<std::vector<QVec>> table(
        2, std::vector<QVec>(2, QVec(2, Rational(0))));
    const AlgebraPtr plane = make_algebra(2, table, {"p", "q"});
    QMat id(2, QVec(2, Rational(0)));
    id[0][0] = id[1][1] = Rational(1);
    const auto d_id = make_derivation(plane, id);
    CHECK_THROWS_AS(embed_weyl(plane->basis(0), d_id), NotLocallyNilpotent);
}
