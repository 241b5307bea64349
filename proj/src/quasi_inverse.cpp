#include "orenil/quasi_inverse.hpp"

#include "orenil/errors.hpp"

namespace orenil {

QuasiInverseResult quasi_inverse_nilpotent(const OrePoly &r, unsigned bound) {
    if (bound == 0)
        throw Error("quasi_inverse_nilpotent: bound must be >= 1");
    OrePoly series = OrePoly::zero(r.algebra(), r.derivation());
    OrePoly current = r; // r^m as m advances
    unsigned nil_index = 0;
    for (unsigned m = 1; m <= bound; ++m) {
        if (current.is_zero()) {
            nil_index = m;
            break;
        }
        series = series + current;
        if (m < bound)
            current = ore_mul(current, r);
    }
    if (nil_index == 0)
        throw NotNilpotentWithinBound(
            "quasi_inverse_nilpotent: no power of r vanishes up to m = " +
            std::to_string(bound));
    QuasiInverseResult out{r, series, nil_index};
    if (!verify_quasi_inverse(out.element, out.inverse))
        throw Error("quasi_inverse_nilpotent: series fails the defining "
                    "identities");
    return out;
}

bool verify_quasi_inverse(const OrePoly &r, const OrePoly &r_prime) {
    if (r.algebra() != r_prime.algebra() ||
        r.derivation() != r_prime.derivation())
        throw ParentMismatch("verify_quasi_inverse across rings");
    const OrePoly left = r - r_prime + ore_mul(r, r_prime);
    if (!left.is_zero())
        return false;
    const OrePoly right = r - r_prime + ore_mul(r_prime, r);
    return right.is_zero();
}

bool check_uniqueness(const OrePoly &r,
                      const std::vector<OrePoly> &candidates) {
    for (const auto &candidate : candidates)
        if (!verify_quasi_inverse(r, candidate))
            throw PreconditionViolated(
                "check_uniqueness: candidate is not a quasi-inverse of r");
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i] != candidates[0])
            return false;
    return true;
}

QuasiInverseResult conjugated_quasi_inverse(unsigned i, const OrePoly &r,
                                            unsigned bound) {
    const QuasiInverseResult base = quasi_inverse_nilpotent(r, bound);
    const OrePoly conjugate = conjugate_poly(r, static_cast<std::int64_t>(i));
    QuasiInverseResult out = quasi_inverse_nilpotent(conjugate, bound);
    // Degree invariance plus the stronger identity: the conjugate of the
    // quasi-inverse is the quasi-inverse of the conjugate.
    const OrePoly conjugated_series =
        conjugate_poly(base.inverse, static_cast<std::int64_t>(i));
    if (conjugated_series != out.inverse)
        throw Error("conjugated_quasi_inverse: conjugate of the series "
                    "differs from the series of the conjugate");
    if (out.inverse.degree() != base.inverse.degree())
        throw Error("conjugated_quasi_inverse: degree changed under "
                    "conjugation");
    return out;
}

} // namespace orenil
