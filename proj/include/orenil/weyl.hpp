#pragma once

#include "orenil/algebra.hpp"
#include "orenil/derivation.hpp"
#include "orenil/ore_poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace orenil {

/// Element of the unitalization Q + R; the pure-scalar part only ever
/// arises from the Weyl relation X*Y = Y*X + 1 and is never exposed as an
/// Algebra element.
struct UnitalElement {
    Rational scalar;
    AlgebraElement vec;

    bool is_zero() const { return scalar.is_zero() && vec.is_zero(); }

    UnitalElement operator+(const UnitalElement &o) const {
        return {scalar + o.scalar, vec + o.vec};
    }
    UnitalElement operator-(const UnitalElement &o) const {
        return {scalar - o.scalar, vec - o.vec};
    }
    UnitalElement scaled(const Rational &c) const {
        return {scalar * c, vec.scaled(c)};
    }

    friend UnitalElement mul(const UnitalElement &a, const UnitalElement &b) {
        return {a.scalar * b.scalar,
                b.vec.scaled(a.scalar) + a.vec.scaled(b.scalar) +
                    mul_elements(a.vec, b.vec)};
    }

    friend bool operator==(const UnitalElement &a, const UnitalElement &b) {
        return a.scalar == b.scalar && a.vec == b.vec;
    }
    friend bool operator!=(const UnitalElement &a, const UnitalElement &b) {
        return !(a == b);
    }

    std::string str() const;
};

/// Element of the first Weyl algebra A_1(R) = R[Y][X; d/dY] over the
/// unitalization: sum of c_{j,i} Y^j X^i with coefficients commuting with Y
/// and with X; the only nontrivial relation is X*Y = Y*X + 1.
class BiOrePoly {
  public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (y_exp, x_exp)
    using TermMap = std::map<Key, UnitalElement>;

    static BiOrePoly zero(AlgebraPtr algebra);
    static BiOrePoly monomial(const UnitalElement &coeff, std::int64_t y_exp,
                              std::int64_t x_exp);
    /// The monomial X with unit scalar coefficient.
    static BiOrePoly x_monomial(const AlgebraPtr &algebra);
    /// The monomial Y with unit scalar coefficient.
    static BiOrePoly y_monomial(const AlgebraPtr &algebra);

    const AlgebraPtr &algebra() const { return algebra_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BiOrePoly operator+(const BiOrePoly &o) const;
    BiOrePoly operator-(const BiOrePoly &o) const;

    friend bool operator==(const BiOrePoly &a, const BiOrePoly &b) {
        return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiOrePoly &a, const BiOrePoly &b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    explicit BiOrePoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    void add_term(Key key, const UnitalElement &coeff);

    AlgebraPtr algebra_;
    TermMap terms_;

    friend BiOrePoly bi_ore_mul(const BiOrePoly &, const BiOrePoly &);
    friend BiOrePoly embed_weyl(const AlgebraElement &, const DerivationPtr &);
    friend BiOrePoly embed_ore_poly(const OrePoly &);
};

/// The embedding R -> A_1(R), r -> sum_i (d^i(r)/i!) Y^i. Throws
/// NotLocallyNilpotent when the d-orbit of r does not terminate.
BiOrePoly embed_weyl(const AlgebraElement &r, const DerivationPtr &d);

/// Companion of embed_weyl sending x -> X.
BiOrePoly embed_weyl_x(const AlgebraPtr &algebra);

/// Term-wise image of an element of R[x;d] (nonnegative exponents only):
/// sum_e embed(a_e) X^e.
BiOrePoly embed_ore_poly(const OrePoly &p);

/// Product in A_1(R) under X*Y = Y*X + 1.
BiOrePoly bi_ore_mul(const BiOrePoly &p, const BiOrePoly &q);

} // namespace orenil
