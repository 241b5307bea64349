#include "orenil/errors.hpp"
#include "orenil/ore_poly.hpp"
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

// P_n(x) x^3 for a = u+v on the Heisenberg instance: (u+v) x^3 + n w x^2.
OrePoly p_n_x3(const HeisenbergFixture &h, long n) {
    return mono(h, h.a, 3) + mono(h, h.w.scaled(Rational(n)), 2);
}

} // namespace

TEST_CASE("commute_power matches the hand values") {
    const HeisenbergFixture h;
    const OrePoly x_v = commute_power(1, h.v, h.d);
    CHECK(x_v == mono(h, h.v, 1) + mono(h, h.w, 0));
    CHECK(x_v.str() == "v*x^1 + w*x^0");

    CHECK(commute_power(0, h.v, h.d) == OrePoly::constant(h.v, h.d));

    const OrePoly x3_v = commute_power(3, h.v, h.d);
    CHECK(x3_v == mono(h, h.v, 3) + mono(h, h.w.scaled(Rational(3)), 2));
}

TEST_CASE("commute_power equals the iterated single-step oracle") {
    std::mt19937 rng(101);
    const HeisenbergFixture h;
    const AlgebraPtr fn = free_nilpotent_algebra(2, 3);
    const auto fn_d = inner_derivation(orenil::test::random_element(rng, fn));
    struct Case {
        AlgebraPtr alg;
        DerivationPtr d;
    } cases[] = {{h.alg, h.d}, {fn, fn_d}};
    for (const auto &c : cases) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto a = orenil::test::random_element(rng, c.alg);
            orenil::test::RawPoly raw = orenil::test::raw_from(a);
            for (unsigned n = 1; n <= 8; ++n) {
                raw = orenil::test::oracle_mul_x_left(raw, c.d);
                CHECK(orenil::test::raw_equals(raw,
                                               commute_power(n, a, c.d)));
            }
        }
    }
}

TEST_CASE("commute_negative gives the Laurent normal form of x^-1 a") {
    const HeisenbergFixture h;
    const OrePoly xinv_v = commute_negative(h.v, h.d, 1);
    CHECK(xinv_v == mono(h, h.v, -1) + mono(h, -h.w, -2));
    CHECK(mul_x_left(xinv_v) == OrePoly::constant(h.v, h.d));

    CHECK(commute_negative(h.w, h.d, 0) == mono(h, h.w, -1));
    CHECK(commute_negative(h.w, h.d, 5) == mono(h, h.w, -1));

    // claimed index bound too small
    CHECK_THROWS_AS(commute_negative(h.v, h.d, 0), NotLocallyNilpotent);
}

TEST_CASE("negative exponents require a certified locally nilpotent d") {
    std::vector<std::vector<QVec>> table(
        2, std::vector<QVec>(2, QVec(2, Rational(0))));
    const AlgebraPtr plane = make_algebra(2, table, {"p", "q"});
    QMat id(2, QVec(2, Rational(0)));
    id[0][0] = id[1][1] = Rational(1);
    const auto d_id = make_derivation(plane, id);
    CHECK_THROWS_AS(OrePoly::monomial(plane->basis(0), -1, d_id),
                    NotLocallyNilpotent);
    CHECK_THROWS_AS(commute_negative(plane->basis(0), d_id, 5),
                    NotLocallyNilpotent);
}

TEST_CASE("ore_mul frozen examples") {
    const HeisenbergFixture h;
    // x * v = v x + w via the defining relation
    CHECK(mul_x_left(OrePoly::constant(h.v, h.d)) ==
          commute_power(1, h.v, h.d));

    const OrePoly p = p_n_x3(h, 7);
    CHECK(ore_mul(p, OrePoly::zero(h.alg, h.d)).is_zero());

    const OrePoly p2 = ore_mul(p, p);
    CHECK(p2 == mono(h, h.w, 6));
    CHECK(ore_mul(p2, p).is_zero());
}

TEST_CASE("ore_pow") {
    const HeisenbergFixture h;
    const OrePoly p = p_n_x3(h, 7);
    CHECK(ore_pow(p, 1) == p);
    CHECK(ore_pow(p, 2) == mono(h, h.w, 6));
    CHECK(ore_pow(p, 3).is_zero());
}

TEST_CASE("conjugate_by_power builds P_n") {
    const HeisenbergFixture h;
    CHECK(conjugate_by_power(5, h.v, h.d) ==
          mono(h, h.v, 0) + mono(h, h.w.scaled(Rational(5)), -1));
    CHECK(conjugate_by_power(4, h.w, h.d) == OrePoly::constant(h.w, h.d));
    CHECK(conjugate_by_power(9, h.a, h.d) ==
          mono(h, h.a, 0) + mono(h, h.w.scaled(Rational(9)), -1));
    CHECK_THROWS_AS(conjugate_by_power(1, h.v, h.d), NTooSmall);
}

TEST_CASE("conjugation equals the stepwise product x^n a x^-n") {
    const HeisenbergFixture h;
    for (const auto &a : {h.v, h.a, h.w}) {
        const auto k = local_nilpotency_index(h.d, a, 8);
        REQUIRE(k.has_value());
        for (unsigned n = *k + 1; n <= *k + 6; ++n) {
            OrePoly stepwise = OrePoly::constant(a, h.d);
            for (unsigned i = 0; i < n; ++i)
                stepwise = mul_xinv_right(stepwise);
            for (unsigned i = 0; i < n; ++i)
                stepwise = mul_x_left(stepwise);
            CHECK(conjugate_by_power(n, a, h.d) == stepwise);
        }
    }
}

TEST_CASE("P_n x^{k+2} is the x^{n-k-1} conjugate of P_{k+1} x^{k+2}") {
    const HeisenbergFixture h;
    const AlgebraPtr fn = free_nilpotent_algebra(2, 3);
    const auto fn_d = inner_derivation(fn->basis(0));
    struct Case {
        DerivationPtr d;
        AlgebraElement a;
    } cases[] = {{h.d, h.a}, {h.d, h.v}, {fn_d, fn->basis(1)}};
    for (const auto &c : cases) {
        const auto k = local_nilpotency_index(c.d, c.a, 20);
        REQUIRE(k.has_value());
        const std::int64_t shift = static_cast<std::int64_t>(*k) + 2;
        const OrePoly base =
            shift_exponents(conjugate_by_power(*k + 1, c.a, c.d), shift);
        for (unsigned n = *k + 2; n <= *k + 6; ++n) {
            const OrePoly direct =
                shift_exponents(conjugate_by_power(n, c.a, c.d), shift);
            CHECK(direct ==
                  conjugate_poly(base, static_cast<std::int64_t>(n - *k - 1)));
        }
    }
}

TEST_CASE("conjugate_poly round trips and matches shifts") {
    const HeisenbergFixture h;
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        const OrePoly p = orenil::test::random_ore_poly(rng, h.alg, h.d, -2, 3);
        CHECK(conjugate_poly(conjugate_poly(p, 2), -2) == p);
        CHECK(conjugate_poly(p, 0) == p);
    }
}

TEST_CASE("degree, low_degree, coefficient_at") {
    const HeisenbergFixture h;
    const OrePoly p = commute_power(3, h.v, h.d); // v x^3 + 3w x^2
    CHECK(degree(p) == 3);
    CHECK(low_degree(p) == 2);
    CHECK(coefficient_at(p, 2) == h.w.scaled(Rational(3)));
    CHECK(coefficient_at(p, 1).is_zero());
    CHECK(coefficient_at(p, -5).is_zero());

    const OrePoly zero = OrePoly::zero(h.alg, h.d);
    CHECK_FALSE(degree(zero).has_value());
    CHECK_FALSE(low_degree(zero).has_value());

    const OrePoly pn = conjugate_by_power(5, h.v, h.d); // v + 5w x^-1
    CHECK(degree(pn) == 0);
    CHECK(low_degree(pn) == -1);

    CHECK(coefficient_at(ore_pow(p_n_x3(h, 7), 2), 6) == h.w);
}

TEST_CASE("ore product is associative and degree-subadditive") {
    const HeisenbergFixture h;
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        const OrePoly p = orenil::test::random_ore_poly(rng, h.alg, h.d, -3, 3);
        const OrePoly q = orenil::test::random_ore_poly(rng, h.alg, h.d, -3, 3);
        const OrePoly r = orenil::test::random_ore_poly(rng, h.alg, h.d, -3, 3);
        CHECK(ore_mul(ore_mul(p, q), r) == ore_mul(p, ore_mul(q, r)));
        CHECK(ore_mul(p + q, r) == ore_mul(p, r) + ore_mul(q, r));

        const auto dp = degree(p), dq = degree(q);
        const auto dpq = degree(ore_mul(p, q));
        if (dp && dq) {
            if (dpq)
                CHECK(*dpq <= *dp + *dq);
            const auto leading = mul_elements(coefficient_at(p, *dp),
                                              coefficient_at(q, *dq));
            if (!leading.is_zero())
                CHECK(dpq == *dp + *dq);
        } else {
            CHECK_FALSE(dpq.has_value());
        }
    }
}

TEST_CASE("single-step inverse laws") {
    const HeisenbergFixture h;
    std::mt19937 rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto a = orenil::test::random_element(rng, h.alg);
        const auto k = local_nilpotency_index(h.d, a, 8);
        REQUIRE(k.has_value());
        CHECK(mul_x_left(commute_negative(a, h.d, *k)) ==
              OrePoly::constant(a, h.d));
        CHECK(mul_xinv_left(commute_power(1, a, h.d)) ==
              OrePoly::constant(a, h.d));
        const OrePoly p = orenil::test::random_ore_poly(rng, h.alg, h.d, -2, 2);
        CHECK(mul_xinv_left(mul_x_left(p)) == p);
        CHECK(mul_xinv_right(mul_x_right(p)) == p);
    }
}

TEST_CASE("exponent guard") {
    const HeisenbergFixture h;
    const std::int64_t guard = std::int64_t(1) << 30;
    CHECK_THROWS_AS(OrePoly::monomial(h.v, guard + 1, h.d), ExponentOverflow);
    CHECK_NOTHROW(OrePoly::monomial(h.v, guard, h.d));
}

TEST_CASE("context mismatches are rejected") {
    const HeisenbergFixture h;
    const auto d2 = inner_derivation(h.u); // distinct derivation object
    const OrePoly p = OrePoly::constant(h.v, h.d);
    const OrePoly q = OrePoly::constant(h.v, d2);
    CHECK_THROWS_AS(ore_mul(p, q), ParentMismatch);
    CHECK(p != q);
}
