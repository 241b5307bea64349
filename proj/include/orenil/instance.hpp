#pragma once

#include "orenil/algebra.hpp"
#include "orenil/derivation.hpp"

#include <json.hpp>

#include <string>

namespace orenil {

struct Bounds {
    unsigned nilpotency = 64;
    unsigned power = 32;
};

/// A fully resolved verification instance: algebra, derivation, the element
/// a, and search bounds, plus the canonical JSON echo used in reports.
struct InstanceSpec {
    AlgebraPtr algebra;
    DerivationPtr derivation;
    AlgebraElement element_a;
    Bounds bounds;
    nlohmann::ordered_json echo;
};

/// Parses an instance document. Accepts either an inline structure-constant
/// table ("basis" + "products") or a generator directive ("algebra":
/// "heisenberg" or {"kind": "free-nilpotent", "generators": g, "class": N}).
/// The derivation is matrix rows (bare array or {"matrix": rows}) or
/// {"inner": <basis label or coordinate vector>}. Rationals are "p/q"
/// strings (plain JSON integers are also accepted); floats are rejected.
InstanceSpec parse_instance(const nlohmann::ordered_json &doc);

/// Reads and parses an instance file; JSON syntax errors are reported as
/// ParseError with the byte position.
InstanceSpec load_instance(const std::string &path);

/// Ready-to-run instance documents for the built-in generators. kind is
/// "heisenberg" or "free-nilpotent" (with g, truncation class).
nlohmann::ordered_json generate_instance_json(const std::string &kind,
                                              unsigned generators = 0,
                                              unsigned truncation_class = 0);

/// Parses "p/q" strings and integral JSON numbers; rejects floats.
Rational rational_from_json(const nlohmann::ordered_json &value);

} // namespace orenil
