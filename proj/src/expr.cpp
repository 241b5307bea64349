#include "orenil/expr.hpp"

#include "orenil/errors.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace orenil {

namespace {

std::string trim(const std::string &s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

bool looks_like_rational(const std::string &s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/')
            return false;
    return true;
}

std::optional<std::int64_t> parse_x_piece(const std::string &piece) {
    if (piece == "x")
        return 1;
    if (piece.rfind("x^", 0) != 0)
        return std::nullopt;
    const std::string exp = piece.substr(2);
    try {
        std::size_t used = 0;
        const long long value = std::stoll(exp, &used);
        if (used != exp.size())
            return std::nullopt;
        return value;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

} // namespace

UnitalOrePoly parse_ore_expr(const std::string &text,
                             const AlgebraPtr &algebra,
                             const DerivationPtr &derivation) {
    UnitalOrePoly out{OrePoly::zero(algebra, derivation), {}};
    for (const std::string &raw_term : split(text, '+')) {
        const std::string term = trim(raw_term);
        if (term.empty())
            throw ParseError("empty term in expression \"" + text + "\"");
        if (term == "0")
            continue;

        Rational coeff(1);
        std::optional<std::size_t> label;
        std::optional<std::int64_t> exponent;
        for (const std::string &raw_piece : split(term, '*')) {
            const std::string piece = trim(raw_piece);
            if (piece.empty())
                throw ParseError("empty factor in term \"" + term + "\"");
            if (const auto idx = algebra->label_index(piece)) {
                if (label)
                    throw ParseError("two basis labels in term \"" + term +
                                     "\"");
                label = *idx;
                continue;
            }
            if (looks_like_rational(piece)) {
                coeff *= Rational::from_string(piece);
                continue;
            }
            if (const auto e = parse_x_piece(piece)) {
                if (exponent)
                    throw ParseError("two x-monomials in term \"" + term +
                                     "\"");
                exponent = *e;
                continue;
            }
            throw ParseError("cannot parse factor \"" + piece + "\" in term \"" +
                             term + "\"");
        }
        const std::int64_t e = exponent.value_or(0);
        if (coeff.is_zero())
            continue;
        if (label) {
            out.ring_part =
                out.ring_part +
                OrePoly::monomial(algebra->basis(*label).scaled(coeff), e,
                                  derivation);
        } else {
            auto it = out.scalar_part.find(e);
            if (it == out.scalar_part.end())
                out.scalar_part.emplace(e, coeff);
            else {
                it->second += coeff;
                if (it->second.is_zero())
                    out.scalar_part.erase(it);
            }
        }
    }
    return out;
}

UnitalOrePoly unital_mul(const UnitalOrePoly &p, const UnitalOrePoly &q) {
    const AlgebraPtr algebra = p.ring_part.algebra();
    const DerivationPtr derivation = p.ring_part.derivation();
    if (algebra != q.ring_part.algebra() ||
        derivation != q.ring_part.derivation())
        throw ParentMismatch("unital_mul across rings");
    UnitalOrePoly out{OrePoly::zero(algebra, derivation), {}};

    auto add_scalar = [&out](std::int64_t e, const Rational &c) {
        if (c.is_zero())
            return;
        auto it = out.scalar_part.find(e);
        if (it == out.scalar_part.end())
            out.scalar_part.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero())
                out.scalar_part.erase(it);
        }
    };

    // ring x ring
    out.ring_part = ore_mul(p.ring_part, q.ring_part);
    // ring x scalar: (sum a_f x^f)(c x^e) = c sum a_f x^{f+e}
    for (const auto &[e, c] : q.scalar_part)
        out.ring_part =
            out.ring_part + shift_exponents(p.ring_part.scaled(c), e);
    // scalar x ring: (c x^e) q = c x^e q x^{-e} x^e
    for (const auto &[e, c] : p.scalar_part)
        out.ring_part =
            out.ring_part +
            shift_exponents(conjugate_poly(q.ring_part, e), e).scaled(c);
    // scalar x scalar: d(1) = 0, exponents add
    for (const auto &[e, c] : p.scalar_part)
        for (const auto &[f, t] : q.scalar_part)
            add_scalar(e + f, c * t);
    return out;
}

std::string unital_str(const UnitalOrePoly &p) {
    if (p.is_zero())
        return "0";
    // Collect exponents descending; scalar monomial first at each exponent.
    std::ostringstream os;
    bool first = true;
    auto ring_it = p.ring_part.terms().rbegin();
    auto scalar_it = p.scalar_part.rbegin();
    const auto &labels = p.ring_part.algebra()->labels();
    while (ring_it != p.ring_part.terms().rend() ||
           scalar_it != p.scalar_part.rend()) {
        const bool take_scalar =
            scalar_it != p.scalar_part.rend() &&
            (ring_it == p.ring_part.terms().rend() ||
             scalar_it->first >= ring_it->first);
        if (take_scalar) {
            if (!first)
                os << " + ";
            first = false;
            if (scalar_it->second != Rational(1))
                os << scalar_it->second.str() << "*";
            os << "x^" << scalar_it->first;
            ++scalar_it;
            continue;
        }
        const auto &coords = ring_it->second.coords();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero())
                continue;
            if (!first)
                os << " + ";
            first = false;
            if (coords[i] != Rational(1))
                os << coords[i].str() << "*";
            os << labels[i] << "*x^" << ring_it->first;
        }
        ++ring_it;
    }
    return os.str();
}

} // namespace orenil
