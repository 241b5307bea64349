#include "orenil/subspace.hpp"

#include "orenil/errors.hpp"

namespace orenil {

Subspace Subspace::span(const AlgebraPtr &parent,
                        const std::vector<AlgebraElement> &elements) {
    QMat rows;
    for (const auto &e : elements) {
        if (e.parent() != parent)
            throw ParentMismatch("Subspace::span across algebras");
        rows.push_back(e.coords());
    }
    if (rows.empty())
        rows.emplace_back(parent->dim(), Rational(0));
    return Subspace(parent, linalg::rref(std::move(rows)));
}

bool Subspace::contains(const AlgebraElement &x) const {
    if (x.parent() != parent_)
        throw ParentMismatch("subspace_contains across algebras");
    QVec remainder = x.coords();
    return linalg::reduce_in_place(basis_, remainder);
}

std::vector<AlgebraElement> Subspace::basis_elements() const {
    std::vector<AlgebraElement> out;
    out.reserve(basis_.rows.size());
    for (const auto &row : basis_.rows)
        out.push_back(parent_->element(row));
    return out;
}

Subspace subalgebra_closure(const std::vector<AlgebraElement> &generators) {
    if (generators.empty())
        throw Error("subalgebra_closure: empty generator list");
    const AlgebraPtr parent = generators.front().parent();
    Subspace current = Subspace::span(parent, generators);
    while (true) {
        std::vector<AlgebraElement> extended = current.basis_elements();
        const std::size_t before = extended.size();
        for (std::size_t i = 0; i < before; ++i)
            for (std::size_t j = 0; j < before; ++j)
                extended.push_back(parent->element(parent->mul_coords(
                    extended[i].coords(), extended[j].coords())));
        Subspace next = Subspace::span(parent, extended);
        if (next.dim() == current.dim())
            return current;
        current = std::move(next);
    }
}

bool subspace_contains(const Subspace &s, const AlgebraElement &x) {
    return s.contains(x);
}

} // namespace orenil
