#pragma once

#include "orenil/algebra.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace orenil {

/// Polynomial in a central variable y with coefficients in an Algebra.
/// Canonical form: trailing zero coefficients trimmed.
class RValuedPolynomial {
  public:
    RValuedPolynomial(AlgebraPtr parent, std::vector<AlgebraElement> coeffs);

    const AlgebraPtr &parent() const { return parent_; }
    const std::vector<AlgebraElement> &coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// Coefficient of y^i (zero element when absent).
    AlgebraElement coefficient(std::size_t i) const;
    AlgebraElement constant_term() const { return coefficient(0); }

    friend bool operator==(const RValuedPolynomial &a,
                           const RValuedPolynomial &b) {
        return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RValuedPolynomial &a,
                           const RValuedPolynomial &b) {
        return !(a == b);
    }

  private:
    AlgebraPtr parent_;
    std::vector<AlgebraElement> coeffs_;
};

using Sample = std::pair<Rational, AlgebraElement>;

/// Exact evaluation sum_i a_i lambda^i.
AlgebraElement evaluate(const RValuedPolynomial &f, const Rational &lambda);

/// The unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 samples, solved coordinate-wise from the Vandermonde
/// system by exact elimination. Surplus samples must match the interpolant
/// (else InconsistentSamples). Throws DuplicatePoint on repeated sample
/// points.
RValuedPolynomial interpolate(const std::vector<Sample> &samples,
                              std::size_t degree_bound);

/// True iff the interpolant through the samples is the zero polynomial:
/// degree_bound+1 distinct zeros force a degree-<=bound polynomial to vanish.
bool is_identically_zero(const std::vector<Sample> &samples,
                         std::size_t degree_bound);

} // namespace orenil
