#pragma once

#include "orenil/algebra.hpp"
#include "orenil/derivation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace orenil {

/// Element of the differential polynomial ring R[x;d] or, when the
/// derivation is certified locally nilpotent, of its Laurent extension
/// R[x, x^-1; d]. Stored in left-coefficient normal form sum_e a_e x^e with
/// no zero coefficients; multiplication reduces eagerly to this form via
/// x a = a x + d(a).
class OrePoly {
  public:
    using TermMap = std::map<std::int64_t, AlgebraElement>;

    static OrePoly zero(AlgebraPtr algebra, DerivationPtr derivation);
    static OrePoly constant(const AlgebraElement &a,
                            const DerivationPtr &derivation);
    static OrePoly monomial(const AlgebraElement &coeff, std::int64_t exponent,
                            const DerivationPtr &derivation);

    const AlgebraPtr &algebra() const { return algebra_; }
    const DerivationPtr &derivation() const { return derivation_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Maximum exponent, or nullopt for the zero polynomial (minus infinity).
    std::optional<std::int64_t> degree() const;
    /// Minimum exponent, or nullopt for the zero polynomial (plus infinity).
    std::optional<std::int64_t> low_degree() const;
    AlgebraElement coefficient_at(std::int64_t exponent) const;

    OrePoly operator+(const OrePoly &o) const;
    OrePoly operator-(const OrePoly &o) const;
    OrePoly scaled(const Rational &c) const;

    friend bool operator==(const OrePoly &a, const OrePoly &b) {
        return a.algebra_ == b.algebra_ && a.derivation_ == b.derivation_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const OrePoly &a, const OrePoly &b) {
        return !(a == b);
    }

    /// Canonical text form: per-basis-component terms "q*label*x^e" joined
    /// by " + ", exponents descending; "0" when zero. Unit coefficients are
    /// printed without the "q*".
    std::string str() const;

  private:
    OrePoly(AlgebraPtr algebra, DerivationPtr derivation)
        : algebra_(std::move(algebra)), derivation_(std::move(derivation)) {}
    void add_term(std::int64_t exponent, const AlgebraElement &coeff);
    void check_exponent(std::int64_t exponent) const;

    AlgebraPtr algebra_;
    DerivationPtr derivation_;
    TermMap terms_;

    friend OrePoly ore_mul(const OrePoly &, const OrePoly &);
    friend OrePoly mul_x_left(const OrePoly &);
    friend OrePoly mul_xinv_left(const OrePoly &);
    friend OrePoly shift_exponents(const OrePoly &, std::int64_t);
    friend OrePoly conjugate_poly(const OrePoly &, std::int64_t);
    friend OrePoly commute_power(unsigned, const AlgebraElement &,
                                 const DerivationPtr &);
    friend OrePoly commute_negative(const AlgebraElement &,
                                    const DerivationPtr &, unsigned);
    friend OrePoly conjugate_by_power(unsigned, const AlgebraElement &,
                                      const DerivationPtr &);
};

/// Left-normal form of x^n * a: sum_{i=0}^{n} C(n,i) d^i(a) x^{n-i}.
OrePoly commute_power(unsigned n, const AlgebraElement &a,
                      const DerivationPtr &d);

/// Left-normal form of x^-1 * a: sum_{i=0}^{k} (-1)^i d^i(a) x^{-1-i},
/// where k bounds the local nilpotency index of a. The defining relation
/// x * (x^-1 a) = a is re-checked on the result.
OrePoly commute_negative(const AlgebraElement &a, const DerivationPtr &d,
                         unsigned k);

/// Product in R[x, x^-1; d], reduced to left-normal form.
OrePoly ore_mul(const OrePoly &p, const OrePoly &q);

/// m-fold product, m >= 1.
OrePoly ore_pow(const OrePoly &p, unsigned m);

/// The conjugate x^n a x^-n = sum_{i=0}^{k} C(n,i) d^i(a) x^{-i}; requires
/// n > k where k is the local nilpotency index of a.
OrePoly conjugate_by_power(unsigned n, const AlgebraElement &a,
                           const DerivationPtr &d);

/// x^i p x^-i for any integer i (negative i needs a certified locally
/// nilpotent derivation).
OrePoly conjugate_poly(const OrePoly &p, std::int64_t i);

/// Single applications of the defining relation; mul_x_left uses only
/// x a = a x + d(a) and is the independent oracle for commute_power.
OrePoly mul_x_left(const OrePoly &p);
OrePoly mul_x_right(const OrePoly &p);
OrePoly mul_xinv_left(const OrePoly &p);
OrePoly mul_xinv_right(const OrePoly &p);

/// p * x^e (right multiplication only shifts exponents).
OrePoly shift_exponents(const OrePoly &p, std::int64_t e);

std::optional<std::int64_t> degree(const OrePoly &p);
std::optional<std::int64_t> low_degree(const OrePoly &p);
AlgebraElement coefficient_at(const OrePoly &p, std::int64_t exponent);

} // namespace orenil
