#include "orenil/ore_poly.hpp"

#include "orenil/errors.hpp"

#include <sstream>

namespace orenil {

namespace {

constexpr std::int64_t kExponentGuard = std::int64_t(1) << 30;

void check_context(const OrePoly &p, const OrePoly &q) {
    if (p.algebra() != q.algebra() || p.derivation() != q.derivation())
        throw ParentMismatch("OrePoly operation across rings");
}

void require_laurent(const DerivationPtr &d) {
    if (!d->locally_nilpotent())
        throw NotLocallyNilpotent(
            "negative exponents need a certified locally nilpotent "
            "derivation");
}

} // namespace

OrePoly OrePoly::zero(AlgebraPtr algebra, DerivationPtr derivation) {
    if (!algebra || !derivation)
        throw Error("OrePoly: null context");
    if (derivation->parent() != algebra)
        throw ParentMismatch("OrePoly: derivation acts on a different algebra");
    return OrePoly(std::move(algebra), std::move(derivation));
}

OrePoly OrePoly::constant(const AlgebraElement &a,
                          const DerivationPtr &derivation) {
    return monomial(a, 0, derivation);
}

OrePoly OrePoly::monomial(const AlgebraElement &coeff, std::int64_t exponent,
                          const DerivationPtr &derivation) {
    OrePoly out = zero(coeff.parent(), derivation);
    out.add_term(exponent, coeff);
    return out;
}

void OrePoly::check_exponent(std::int64_t exponent) const {
    if (exponent > kExponentGuard || exponent < -kExponentGuard)
        throw ExponentOverflow("exponent " + std::to_string(exponent) +
                               " exceeds the |e| <= 2^30 guard");
    if (exponent < 0)
        require_laurent(derivation_);
}

void OrePoly::add_term(std::int64_t exponent, const AlgebraElement &coeff) {
    if (coeff.parent() != algebra_)
        throw ParentMismatch("OrePoly coefficient from a different algebra");
    if (coeff.is_zero())
        return;
    check_exponent(exponent);
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    AlgebraElement sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(sum);
}

std::optional<std::int64_t> OrePoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

std::optional<std::int64_t> OrePoly::low_degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

AlgebraElement OrePoly::coefficient_at(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    if (it == terms_.end())
        return algebra_->zero();
    return it->second;
}

OrePoly OrePoly::operator+(const OrePoly &o) const {
    check_context(*this, o);
    OrePoly out = *this;
    for (const auto &[e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

OrePoly OrePoly::operator-(const OrePoly &o) const {
    check_context(*this, o);
    OrePoly out = *this;
    for (const auto &[e, c] : o.terms_)
        out.add_term(e, -c);
    return out;
}

OrePoly OrePoly::scaled(const Rational &c) const {
    OrePoly out = zero(algebra_, derivation_);
    if (c.is_zero())
        return out;
    for (const auto &[e, coeff] : terms_)
        out.add_term(e, coeff.scaled(c));
    return out;
}

std::string OrePoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &coords = it->second.coords();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero())
                continue;
            if (!first)
                os << " + ";
            first = false;
            if (coords[i] != Rational(1))
                os << coords[i].str() << "*";
            os << algebra_->labels()[i] << "*x^" << it->first;
        }
    }
    return os.str();
}

OrePoly commute_power(unsigned n, const AlgebraElement &a,
                      const DerivationPtr &d) {
    if (a.parent() != d->parent())
        throw ParentMismatch("commute_power across algebras");
    OrePoly out = OrePoly::zero(a.parent(), d);
    AlgebraElement term = a;
    for (unsigned i = 0; i <= n && !term.is_zero(); ++i) {
        out.add_term(static_cast<std::int64_t>(n) - i,
                     term.scaled(binomial(n, i)));
        term = d->apply(term);
    }
    return out;
}

OrePoly commute_negative(const AlgebraElement &a, const DerivationPtr &d,
                         unsigned k) {
    if (a.parent() != d->parent())
        throw ParentMismatch("commute_negative across algebras");
    require_laurent(d);
    if (!apply_power(d, a, k + 1).is_zero())
        throw NotLocallyNilpotent(
            "commute_negative: d^(k+1)(a) != 0 for the claimed index bound");
    OrePoly out = OrePoly::zero(a.parent(), d);
    AlgebraElement term = a;
    Rational sign(1);
    for (unsigned i = 0; i <= k && !term.is_zero(); ++i) {
        out.add_term(-1 - static_cast<std::int64_t>(i), term.scaled(sign));
        sign = -sign;
        term = d->apply(term);
    }
    if (mul_x_left(out) != OrePoly::constant(a, d))
        throw Error("commute_negative: normal form fails x*(x^-1 a) = a");
    return out;
}

OrePoly ore_mul(const OrePoly &p, const OrePoly &q) {
    check_context(p, q);
    const std::size_t orbit_guard = p.algebra()->dim() + 1;
    OrePoly out = OrePoly::zero(p.algebra(), p.derivation());
    for (const auto &[e, a] : p.terms()) {
        if (e < 0)
            require_laurent(p.derivation());
        for (const auto &[f, b] : q.terms()) {
            // x^e b = sum_i C(e, i) d^i(b) x^{e-i} with the generalized
            // binomial; the orbit d^i(b) ends at zero (locally nilpotent d)
            // or the binomial vanishes (i > e >= 0).
            AlgebraElement orbit = b;
            for (std::size_t i = 0; !orbit.is_zero(); ++i) {
                if (e >= 0 && static_cast<std::int64_t>(i) > e)
                    break;
                if (i > orbit_guard)
                    throw Error("ore_mul: derivation orbit failed to "
                                "terminate");
                const Rational c =
                    generalized_binomial(e, static_cast<unsigned long>(i));
                if (!c.is_zero()) {
                    AlgebraElement coeff = mul_elements(a, orbit).scaled(c);
                    out.add_term(e - static_cast<std::int64_t>(i) + f, coeff);
                }
                orbit = p.derivation()->apply(orbit);
            }
        }
    }
    return out;
}

OrePoly ore_pow(const OrePoly &p, unsigned m) {
    if (m == 0)
        throw Error("ore_pow: exponent must be >= 1");
    OrePoly acc = p;
    for (unsigned i = 1; i < m; ++i)
        acc = ore_mul(acc, p);
    return acc;
}

OrePoly conjugate_by_power(unsigned n, const AlgebraElement &a,
                           const DerivationPtr &d) {
    if (a.parent() != d->parent())
        throw ParentMismatch("conjugate_by_power across algebras");
    require_laurent(d);
    const auto k = local_nilpotency_index(d, a, d->parent()->dim() + 1);
    if (!k)
        throw Error("conjugate_by_power: orbit failed to terminate");
    if (n <= *k)
        throw NTooSmall("conjugate_by_power: n = " + std::to_string(n) +
                        " must exceed the local nilpotency index k = " +
                        std::to_string(*k));
    OrePoly out = OrePoly::zero(a.parent(), d);
    AlgebraElement term = a;
    for (unsigned i = 0; i <= *k && !term.is_zero(); ++i) {
        out.add_term(-static_cast<std::int64_t>(i),
                     term.scaled(binomial(n, i)));
        term = d->apply(term);
    }
    return out;
}

OrePoly conjugate_poly(const OrePoly &p, std::int64_t i) {
    if (i < 0)
        require_laurent(p.derivation());
    const std::size_t orbit_guard = p.algebra()->dim() + 1;
    OrePoly out = OrePoly::zero(p.algebra(), p.derivation());
    for (const auto &[e, a] : p.terms()) {
        AlgebraElement orbit = a;
        for (std::size_t t = 0; !orbit.is_zero(); ++t) {
            if (i >= 0 && static_cast<std::int64_t>(t) > i)
                break;
            if (t > orbit_guard)
                throw Error("conjugate_poly: orbit failed to terminate");
            const Rational c =
                generalized_binomial(i, static_cast<unsigned long>(t));
            if (!c.is_zero())
                out.add_term(e - static_cast<std::int64_t>(t),
                             orbit.scaled(c));
            orbit = p.derivation()->apply(orbit);
        }
    }
    return out;
}

OrePoly mul_x_left(const OrePoly &p) {
    OrePoly out = OrePoly::zero(p.algebra(), p.derivation());
    for (const auto &[e, a] : p.terms()) {
        out.add_term(e + 1, a);
        out.add_term(e, p.derivation()->apply(a));
    }
    return out;
}

OrePoly mul_x_right(const OrePoly &p) { return shift_exponents(p, 1); }

OrePoly mul_xinv_left(const OrePoly &p) {
    require_laurent(p.derivation());
    const std::size_t orbit_guard = p.algebra()->dim() + 1;
    OrePoly out = OrePoly::zero(p.algebra(), p.derivation());
    for (const auto &[e, a] : p.terms()) {
        AlgebraElement orbit = a;
        Rational sign(1);
        for (std::size_t i = 0; !orbit.is_zero(); ++i) {
            if (i > orbit_guard)
                throw Error("mul_xinv_left: orbit failed to terminate");
            out.add_term(e - 1 - static_cast<std::int64_t>(i),
                         orbit.scaled(sign));
            sign = -sign;
            orbit = p.derivation()->apply(orbit);
        }
    }
    return out;
}

OrePoly mul_xinv_right(const OrePoly &p) { return shift_exponents(p, -1); }

OrePoly shift_exponents(const OrePoly &p, std::int64_t e) {
    OrePoly out = OrePoly::zero(p.algebra(), p.derivation());
    for (const auto &[f, a] : p.terms())
        out.add_term(f + e, a);
    return out;
}

std::optional<std::int64_t> degree(const OrePoly &p) { return p.degree(); }

std::optional<std::int64_t> low_degree(const OrePoly &p) {
    return p.low_degree();
}

AlgebraElement coefficient_at(const OrePoly &p, std::int64_t exponent) {
    return p.coefficient_at(exponent);
}

} // namespace orenil
