#include "orenil/errors.hpp"
#include "orenil/harness.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace orenil;
using orenil::test::HeisenbergFixture;

TEST_CASE("check id round trip") {
    for (CheckId id : all_check_ids())
        CHECK(parse_check_id(check_id_name(id)) == id);
    CHECK_FALSE(parse_check_id("nonsense").has_value());
}

TEST_CASE("property1 closed form agrees with iterated commutation") {
    const HeisenbergFixture h;
    const LemmaReport report = verify_property1(h.d, h.v, 6);
    CHECK(report.passed());
    CHECK(report.checks_run == 6);

    const auto d0 = make_derivation(h.alg, QMat(3, QVec(3, Rational(0))));
    CHECK(verify_property1(d0, h.a, 5).passed());

    std::mt19937 rng(83);
    for (const auto &inst : orenil::test::free_nilpotent_roster(3)) {
        CHECK(verify_property1(inst.d, inst.a, 5).passed());
    }
}

TEST_CASE("lemma1: exponent window and coefficient membership") {
    const HeisenbergFixture h;
    const LemmaReport report = verify_lemma1(h.d, h.a, 3, 7);
    CHECK(report.passed());
    CHECK(report.checks_run > 0);

    // degenerate k = 0 instance: d(w) = 0, (w x^2)^m = w^m x^{2m}
    CHECK(verify_lemma1(h.d, h.w, 3, 1).passed());

    // the helper that the window checks run against
    const OrePoly r = conjugate_times_power(7, h.a, h.d);
    CHECK(r == OrePoly::monomial(h.a, 3, h.d) +
                   OrePoly::monomial(h.w.scaled(Rational(7)), 2, h.d));
}

TEST_CASE("lemma3 report") {
    const HeisenbergFixture h;
    const LemmaReport report = verify_lemma3(h.d, h.a, 5, 4, 32);
    CHECK(report.passed());
    CHECK(report.checks_run == 20);
}

TEST_CASE("lemma4: b_0 = a^m, higher b_i have zero constant term") {
    const HeisenbergFixture h;
    const LemmaReport report = verify_lemma4(h.d, h.a, 3, {2, 3, 4, 5});
    CHECK(report.passed());

    // hand anchor: at m = 1, b_1(n) = n w
    std::vector<Sample> b1;
    for (unsigned n : {2u, 3u}) {
        const OrePoly r = conjugate_times_power(n, h.a, h.d);
        b1.emplace_back(Rational(static_cast<long>(n)), r.coefficient_at(2));
    }
    const RValuedPolynomial q = interpolate(b1, 1);
    CHECK(q == RValuedPolynomial(h.alg, {h.alg->zero(), h.w}));

    // k = 0: only b_0 = a^m exists
    CHECK(verify_lemma4(h.d, h.w, 3, {1}).passed());

    CHECK_THROWS_AS(verify_lemma4(h.d, h.a, 2, {1, 2, 3}), NTooSmall);
    CHECK_THROWS_AS(verify_lemma4(h.d, h.a, 3, {2, 3}), Error);
}

TEST_CASE("lemma4 constant terms equal the conjugation-free expansion") {
    // The zero-constant-term claim for b_i (i > 0) is false once a*d(a)
    // survives: the constant term (value at n = 0) of each b_i is the
    // matching coefficient of (a x^{k+2})^m. Canonical counterexample:
    // free-nilpotent g=2 class=3, d = inner(a), element b, where at m = 2
    // the constant term of b_1 is (k+2)*b*d(b) = 4*(bab - bba) != 0.
    const AlgebraPtr fn = free_nilpotent_algebra(2, 3);
    const auto d = inner_derivation(fn->basis(0));
    const AlgebraElement b = fn->basis(1);
    const unsigned k = *local_nilpotency_index(d, b, 20);
    CHECK(k == 2);

    std::vector<Sample> b1_samples;
    for (unsigned n = k + 1; n <= k + 3; ++n) {
        const OrePoly r2 = ore_pow(conjugate_times_power(n, b, d), 2);
        b1_samples.emplace_back(Rational(static_cast<long>(n)),
                                r2.coefficient_at(2 * (k + 2) - 1));
    }
    const RValuedPolynomial b1 = interpolate(b1_samples, 2);
    const AlgebraElement expected_constant =
        mul_elements(b, d->apply(b)).scaled(Rational(static_cast<long>(k) + 2));
    REQUIRE_FALSE(expected_constant.is_zero());
    CHECK(b1.constant_term() == expected_constant);

    // verify_lemma4 reports this faithfully: the b_0 = a^m checks pass,
    // the zero-constant-term checks do not.
    const LemmaReport report = verify_lemma4(d, b, 2, {3, 4, 5, 6, 7, 8, 9});
    CHECK_FALSE(report.passed());
    for (const auto &failure : report.failures)
        CHECK(failure.description.rfind("constant term of b_", 0) == 0);
}

TEST_CASE("compute_N window arithmetic") {
    CHECK(compute_N(1, 3) == 4);
    CHECK(compute_N(0, 1) == 1);
    CHECK(compute_N(0, 7) == 7);
    CHECK(compute_N(2, 2) == 4);
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned m0 = 1; m0 <= 5; ++m0) {
            const unsigned N = compute_N(k, m0);
            CHECK(2 * N <= (k + 2) * m0);
            CHECK((k + 2) * m0 <= (k + 2) * N);
            CHECK(2 * (N + 1) > (k + 2) * m0);
        }
}

TEST_CASE("lemma5: the x^{(k+2)m0} coefficient has constant term a^{m0}") {
    const HeisenbergFixture h;
    CHECK(verify_lemma5(h.d, h.a, 1, {2, 3}).passed());
    CHECK(verify_lemma5(h.d, h.a, 2, {2, 3, 4, 5}).passed());
    CHECK(verify_lemma5(h.d, h.a, 3, {2, 3, 4, 5, 6}).passed());
    // k = 0 degenerate
    CHECK(verify_lemma5(h.d, h.w, 2, {1}).passed());
    CHECK_THROWS_AS(verify_lemma5(h.d, h.a, 2, {2, 3}), Error);
}

TEST_CASE("weyl homomorphism suite") {
    const HeisenbergFixture h;
    const LemmaReport report = verify_weyl_homomorphism(h.d, 10);
    CHECK(report.passed());
    CHECK(report.checks_run == 20);

    const auto d0 = make_derivation(h.alg, QMat(3, QVec(3, Rational(0))));
    CHECK(verify_weyl_homomorphism(d0, 5).passed());
}

TEST_CASE("main theorem trace on the Heisenberg instance") {
    const HeisenbergFixture h;
    const TheoremTrace trace = trace_main_theorem(h.d, h.a, 32);
    CHECK(trace.k == 1);
    CHECK(trace.nil_index == 3);
    CHECK(trace.t_degree == 6);
    CHECK(trace.chosen_m == 3);
    CHECK(trace.chosen_M == 5);
    CHECK(trace.q_samples.size() == 6); // Mk + 1 samples at n = 2..7
    CHECK(trace.q_polynomial.is_zero());
    CHECK(trace.constant_term.is_zero());
    CHECK(trace.a_power.is_zero());
    CHECK(power(h.a, trace.chosen_m).is_zero());
}

TEST_CASE("main theorem trace in degenerate and generated instances") {
    const HeisenbergFixture h;
    const TheoremTrace zero_trace = trace_main_theorem(h.d, h.alg->zero(), 32);
    CHECK(zero_trace.k == 0);
    CHECK(zero_trace.chosen_m == 1);
    CHECK(zero_trace.a_power.is_zero());

    // g = 2, class = 3, d = inner(first generator), a = second generator
    const AlgebraPtr fn = free_nilpotent_algebra(2, 3);
    const auto d = inner_derivation(fn->basis(0));
    const TheoremTrace fn_trace = trace_main_theorem(d, fn->basis(1), 32);
    CHECK(fn_trace.a_power.is_zero());
    CHECK(power(fn->basis(1), fn_trace.chosen_m).is_zero());

    for (const auto &inst : orenil::test::free_nilpotent_roster(4)) {
        const TheoremTrace t = trace_main_theorem(inst.d, inst.a, 32);
        CHECK(t.a_power.is_zero());
    }
}

TEST_CASE("main theorem trace refuses non-nilpotent coefficient algebras") {
    std::vector<std::vector<QVec>> table(
        1, std::vector<QVec>(1, QVec(1, Rational(1))));
    const AlgebraPtr idem = make_algebra(1, table, {"e"});
    const auto d0 = make_derivation(idem, QMat(1, QVec(1, Rational(0))));
    CHECK_THROWS_AS(trace_main_theorem(d0, idem->basis(0), 32),
                    NotNilpotentWithinBound);
}

TEST_CASE("main theorem trace requires a locally nilpotent derivation") {
    std::vector<std::vector<QVec>> table(
        2, std::vector<QVec>(2, QVec(2, Rational(0))));
    const AlgebraPtr plane = make_algebra(2, table, {"p", "q"});
    QMat id(2, QVec(2, Rational(0)));
    id[0][0] = id[1][1] = Rational(1);
    const auto d_id = make_derivation(plane, id);
    CHECK_THROWS_AS(trace_main_theorem(d_id, plane->basis(0), 32),
                    NotLocallyNilpotent);
}

TEST_CASE("lemma report bookkeeping") {
    LemmaReport report{CheckId::Lemma1, "test"};
    report.check(true, "ok", "x", "x");
    CHECK(report.passed());
    report.check(false, "bad", "x", "y");
    CHECK_FALSE(report.passed());
    CHECK(report.checks_run == 2);
    CHECK(report.failures.size() == 1);
    CHECK(report.failures[0].description == "bad");
}
