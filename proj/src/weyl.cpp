#include "orenil/weyl.hpp"

#include "orenil/errors.hpp"

#include <sstream>

namespace orenil {

std::string UnitalElement::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (!scalar.is_zero()) {
        os << scalar.str();
        first = false;
    }
    if (!vec.is_zero()) {
        if (!first)
            os << " + ";
        os << vec.str();
    }
    return os.str();
}

BiOrePoly BiOrePoly::zero(AlgebraPtr algebra) {
    if (!algebra)
        throw Error("BiOrePoly: null algebra");
    return BiOrePoly(std::move(algebra));
}

BiOrePoly BiOrePoly::monomial(const UnitalElement &coeff, std::int64_t y_exp,
                              std::int64_t x_exp) {
    BiOrePoly out = zero(coeff.vec.parent());
    out.add_term({y_exp, x_exp}, coeff);
    return out;
}

BiOrePoly BiOrePoly::x_monomial(const AlgebraPtr &algebra) {
    return monomial({Rational(1), algebra->zero()}, 0, 1);
}

BiOrePoly BiOrePoly::y_monomial(const AlgebraPtr &algebra) {
    return monomial({Rational(1), algebra->zero()}, 1, 0);
}

void BiOrePoly::add_term(Key key, const UnitalElement &coeff) {
    if (coeff.vec.parent() != algebra_)
        throw ParentMismatch("BiOrePoly coefficient from a different algebra");
    if (coeff.is_zero())
        return;
    if (key.first < 0 || key.second < 0)
        throw Error("BiOrePoly: negative exponents are not part of A_1(R)");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    UnitalElement sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(sum);
}

BiOrePoly BiOrePoly::operator+(const BiOrePoly &o) const {
    if (algebra_ != o.algebra_)
        throw ParentMismatch("BiOrePoly addition across algebras");
    BiOrePoly out = *this;
    for (const auto &[key, c] : o.terms_)
        out.add_term(key, c);
    return out;
}

BiOrePoly BiOrePoly::operator-(const BiOrePoly &o) const {
    if (algebra_ != o.algebra_)
        throw ParentMismatch("BiOrePoly subtraction across algebras");
    BiOrePoly out = *this;
    for (const auto &[key, c] : o.terms_)
        out.add_term(key, c.scaled(Rational(-1)));
    return out;
}

std::string BiOrePoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (key.first != 0)
            os << "*Y^" << key.first;
        if (key.second != 0)
            os << "*X^" << key.second;
    }
    return os.str();
}

BiOrePoly embed_weyl(const AlgebraElement &r, const DerivationPtr &d) {
    if (r.parent() != d->parent())
        throw ParentMismatch("embed_weyl across algebras");
    const std::size_t guard = r.parent()->dim() + 1;
    BiOrePoly out = BiOrePoly::zero(r.parent());
    AlgebraElement orbit = r;
    for (std::size_t i = 0; !orbit.is_zero(); ++i) {
        if (i > guard)
            throw NotLocallyNilpotent(
                "embed_weyl: the d-orbit of the element does not terminate");
        const Rational inv_fact = Rational(1) / factorial(i);
        out.add_term({static_cast<std::int64_t>(i), 0},
                     {Rational(0), orbit.scaled(inv_fact)});
        orbit = d->apply(orbit);
    }
    return out;
}

BiOrePoly embed_weyl_x(const AlgebraPtr &algebra) {
    return BiOrePoly::x_monomial(algebra);
}

BiOrePoly embed_ore_poly(const OrePoly &p) {
    BiOrePoly out = BiOrePoly::zero(p.algebra());
    for (const auto &[e, a] : p.terms()) {
        if (e < 0)
            throw Error("embed_ore_poly: Laurent exponents do not embed "
                        "into A_1(R)");
        BiOrePoly image = embed_weyl(a, p.derivation());
        for (const auto &[key, c] : image.terms())
            out.add_term({key.first, key.second + e}, c);
    }
    return out;
}

BiOrePoly bi_ore_mul(const BiOrePoly &p, const BiOrePoly &q) {
    if (p.algebra() != q.algebra())
        throw ParentMismatch("bi_ore_mul across algebras");
    BiOrePoly out = BiOrePoly::zero(p.algebra());
    for (const auto &[pk, pc] : p.terms())
        for (const auto &[qk, qc] : q.terms()) {
            const std::int64_t j1 = pk.first, i1 = pk.second;
            const std::int64_t j2 = qk.first, i2 = qk.second;
            const UnitalElement coeff = mul(pc, qc);
            if (coeff.is_zero())
                continue;
            // X^i1 Y^j2 = sum_t C(i1,t) j2!/(j2-t)! Y^{j2-t} X^{i1-t}
            const std::int64_t t_max = std::min(i1, j2);
            Rational falling(1);
            for (std::int64_t t = 0; t <= t_max; ++t) {
                const Rational c =
                    binomial(static_cast<unsigned long>(i1),
                             static_cast<unsigned long>(t)) *
                    falling;
                out.add_term({j1 + j2 - t, i1 + i2 - t}, coeff.scaled(c));
                falling *= Rational(static_cast<long>(j2 - t));
            }
        }
    return out;
}

} // namespace orenil
