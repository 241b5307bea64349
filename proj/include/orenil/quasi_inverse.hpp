#pragma once

#include "orenil/ore_poly.hpp"

#include <vector>

namespace orenil {

/// Quasi-inverse r' of a nilpotent r, with the witnessing nilpotency index.
/// Both defining identities r - r' + r r' = 0 and r - r' + r' r = 0 are
/// checked on construction.
struct QuasiInverseResult {
    OrePoly element;
    OrePoly inverse;
    unsigned nil_index;
};

/// Finds the least m <= bound with r^m = 0 and returns the geometric-series
/// quasi-inverse r' = r + r^2 + ... + r^{m-1}. Throws
/// NotNilpotentWithinBound when no such m exists up to the bound.
QuasiInverseResult quasi_inverse_nilpotent(const OrePoly &r, unsigned bound);

/// True iff both two-sided quasi-inverse identities hold exactly.
bool verify_quasi_inverse(const OrePoly &r, const OrePoly &r_prime);

/// All candidates must pass verify_quasi_inverse against r (else
/// PreconditionViolated); returns true iff they are all equal.
bool check_uniqueness(const OrePoly &r, const std::vector<OrePoly> &candidates);

/// Quasi-inverse of x^i r x^-i, computed directly from the conjugate and
/// cross-checked against the conjugate of the quasi-inverse of r; the two
/// must agree and must have equal degree (degree invariance under
/// conjugation).
QuasiInverseResult conjugated_quasi_inverse(unsigned i, const OrePoly &r,
                                            unsigned bound);

} // namespace orenil
