#pragma once

#include "orenil/algebra.hpp"
#include "orenil/derivation.hpp"
#include "orenil/ore_poly.hpp"

#include <map>
#include <random>
#include <vector>

namespace orenil::test {

/// The Heisenberg instance used throughout: u*v = w, d = inner(u), a = u+v.
struct HeisenbergFixture {
    AlgebraPtr alg;
    AlgebraElement u, v, w, a;
    DerivationPtr d;

    HeisenbergFixture()
        : alg(heisenberg_algebra()), u(alg->basis(0)), v(alg->basis(1)),
          w(alg->basis(2)), a(u + v), d(inner_derivation(u)) {}

    AlgebraElement el(long cu, long cv, long cw) const {
        return alg->element({Rational(cu), Rational(cv), Rational(cw)});
    }
};

inline Rational random_rational(std::mt19937 &rng, int max_abs = 3,
                                int max_den = 2) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline AlgebraElement random_element(std::mt19937 &rng,
                                     const AlgebraPtr &alg) {
    QVec coords(alg->dim(), Rational(0));
    for (auto &c : coords)
        c = random_rational(rng);
    return alg->element(std::move(coords));
}

inline OrePoly random_ore_poly(std::mt19937 &rng, const AlgebraPtr &alg,
                               const DerivationPtr &d, int min_exp,
                               int max_exp) {
    OrePoly out = OrePoly::zero(alg, d);
    std::uniform_int_distribution<int> exp(min_exp, max_exp);
    std::uniform_int_distribution<int> count(1, 3);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t)
        out = out + OrePoly::monomial(random_element(rng, alg), exp(rng), d);
    return out;
}

/// Independent oracle for left multiplication by x: applies only the
/// defining relation x a = a x + d(a) on a plain exponent map, sharing no
/// code with the OrePoly product.
using RawPoly = std::map<std::int64_t, AlgebraElement>;

inline RawPoly raw_from(const AlgebraElement &a) { return {{0, a}}; }

inline RawPoly oracle_mul_x_left(const RawPoly &p, const DerivationPtr &d) {
    RawPoly out;
    auto add = [&out](std::int64_t e, const AlgebraElement &c) {
        if (c.is_zero())
            return;
        auto it = out.find(e);
        if (it == out.end())
            out.emplace(e, c);
        else {
            AlgebraElement sum = it->second + c;
            if (sum.is_zero())
                out.erase(it);
            else
                it->second = sum;
        }
    };
    for (const auto &[e, c] : p) {
        add(e + 1, c);
        add(e, d->apply(c));
    }
    return out;
}

inline bool raw_equals(const RawPoly &raw, const OrePoly &p) {
    return raw == p.terms();
}

/// Deterministic roster of free-nilpotent instances (g <= 2, class <= 3)
/// with an inner derivation and a random base element.
struct Instance {
    AlgebraPtr alg;
    DerivationPtr d;
    AlgebraElement a;
};

inline std::vector<Instance> free_nilpotent_roster(std::size_t count,
                                                   unsigned seed = 20240817u) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<unsigned> gens(1, 2);
    std::uniform_int_distribution<unsigned> cls(1, 3);
    std::vector<Instance> out;
    while (out.size() < count) {
        const AlgebraPtr alg = free_nilpotent_algebra(gens(rng), cls(rng));
        const DerivationPtr d = inner_derivation(random_element(rng, alg));
        out.push_back({alg, d, random_element(rng, alg)});
    }
    return out;
}

} // namespace orenil::test
