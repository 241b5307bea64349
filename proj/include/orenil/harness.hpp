#pragma once

#include "orenil/algebra.hpp"
#include "orenil/derivation.hpp"
#include "orenil/interpolation.hpp"
#include "orenil/ore_poly.hpp"
#include "orenil/quasi_inverse.hpp"
#include "orenil/subspace.hpp"
#include "orenil/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orenil {

/// Identifiers of the verification suites exposed by the CLI.
enum class CheckId {
    Property1,
    Lemma1,
    Lemma3,
    Lemma4,
    Lemma5,
    WeylHom,
    MainTheorem,
};

std::string check_id_name(CheckId id);
std::optional<CheckId> parse_check_id(const std::string &name);
std::vector<CheckId> all_check_ids();

struct LemmaFailure {
    std::string description;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite on one instance. Passing means no
/// recorded failures.
struct LemmaReport {
    CheckId id;
    std::string instance_description;
    std::size_t checks_run = 0;
    std::vector<LemmaFailure> failures = {};

    bool passed() const { return failures.empty(); }
    void check(bool ok, const std::string &description,
               const std::string &expected, const std::string &actual);
};

/// Quantities produced by the end-to-end nil trace for one (d, a) instance.
struct TheoremTrace {
    unsigned k = 0;                       // local nilpotency index of a
    unsigned nil_index = 0;               // of P_n x^{k+2}
    std::optional<std::int64_t> t_degree; // common degree of the T_n
    unsigned chosen_m = 0;
    unsigned chosen_M = 0;
    std::vector<Sample> q_samples;
    RValuedPolynomial q_polynomial;
    AlgebraElement constant_term;
    AlgebraElement a_power; // a^m, confirmed zero
};

/// P_n(x) x^{k+2}, the nilpotent element the whole chain is built around.
OrePoly conjugate_times_power(unsigned n, const AlgebraElement &a,
                              const DerivationPtr &d);

/// Closed-form x^n a against n-fold application of x a = a x + d(a).
LemmaReport verify_property1(const DerivationPtr &d, const AlgebraElement &a,
                             unsigned n_max);

/// Exponent window [2m, (k+2)m] and coefficient membership in the
/// subalgebra generated by a, d(a), ..., d^k(a), for (P_n x^{k+2})^m.
LemmaReport verify_lemma1(const DerivationPtr &d, const AlgebraElement &a,
                          unsigned m_max, unsigned n);

/// Degree invariance of the quasi-inverse under conjugation by x^i.
LemmaReport verify_lemma3(const DerivationPtr &d, const AlgebraElement &a,
                          unsigned i_max, unsigned n_count, unsigned bound);

/// Interpolated leading coefficient b_0 = a^m; every other b_i is a
/// polynomial in n with zero constant term.
LemmaReport verify_lemma4(const DerivationPtr &d, const AlgebraElement &a,
                          unsigned m_max,
                          const std::vector<unsigned> &n_samples);

/// Largest N whose exponent window [2N, (k+2)N] contains (k+2)m0.
unsigned compute_N(unsigned k, unsigned m0);

/// The x^{(k+2)m0} coefficient of sum_{m=1}^{N} (P_n x^{k+2})^m is a
/// polynomial in n with constant term a^{m0}.
LemmaReport verify_lemma5(const DerivationPtr &d, const AlgebraElement &a,
                          unsigned m0, const std::vector<unsigned> &n_samples);

/// Multiplicativity of r -> sum_i (d^i(r)/i!) Y^i and preservation of the
/// defining relation, on deterministic random pairs.
LemmaReport verify_weyl_homomorphism(const DerivationPtr &d,
                                     unsigned sample_count);

/// Runs the full nil chain: k, T_n degrees, telescoping, the choice of m
/// and M, the vanishing interpolant Q, and the direct check a^m = 0.
/// Throws NotNilpotentWithinBound when the coefficient algebra is not
/// nilpotent, TraceAssertionFailure when any chain step fails.
TheoremTrace trace_main_theorem(const DerivationPtr &d,
                                const AlgebraElement &a, unsigned bound);

/// Short human-readable instance label used in reports.
std::string describe_instance(const DerivationPtr &d, const AlgebraElement &a);

} // namespace orenil
