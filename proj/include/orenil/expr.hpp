#pragma once

#include "orenil/ore_poly.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace orenil {

/// Ore element over the transient unitalization Q + R: the ring part has
/// coefficients in R, the scalar part collects bare rational x^e monomials
/// (the operators x^e themselves, which have no representation inside the
/// non-unital R). d extends by d(1) = 0.
struct UnitalOrePoly {
    OrePoly ring_part;
    std::map<std::int64_t, Rational> scalar_part;

    bool is_zero() const { return ring_part.is_zero() && scalar_part.empty(); }
};

/// Parses the minimal expression grammar: '+'-separated terms, each a '*'
/// product of an optional rational literal, an optional basis label and an
/// optional x^e monomial (e any integer). Examples: "1*x^1",
/// "1*v*x^3 + 7*w*x^2", "0".
UnitalOrePoly parse_ore_expr(const std::string &text, const AlgebraPtr &algebra,
                             const DerivationPtr &derivation);

UnitalOrePoly unital_mul(const UnitalOrePoly &p, const UnitalOrePoly &q);

/// Canonical printed form, parseable by the same grammar: exponents
/// descending, scalar monomials before labeled ones, " + " separators.
std::string unital_str(const UnitalOrePoly &p);

} // namespace orenil
