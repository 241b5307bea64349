#pragma once

#include "orenil/algebra.hpp"
#include "orenil/matrix.hpp"

#include <vector>

namespace orenil {

/// Linear subspace of an Algebra stored as a reduced row-echelon basis.
/// The representation is canonical: equal subspaces compare equal.
class Subspace {
  public:
    /// Row space of the given elements (no multiplicative closure).
    static Subspace span(const AlgebraPtr &parent,
                         const std::vector<AlgebraElement> &elements);

    const AlgebraPtr &parent() const { return parent_; }
    const QMat &basis_matrix() const { return basis_.rows; }
    std::size_t dim() const { return basis_.rank(); }

    bool contains(const AlgebraElement &x) const;

    friend bool operator==(const Subspace &a, const Subspace &b) {
        return a.parent_ == b.parent_ && a.basis_.rows == b.basis_.rows;
    }
    friend bool operator!=(const Subspace &a, const Subspace &b) {
        return !(a == b);
    }

    /// Basis rows as elements of the parent algebra.
    std::vector<AlgebraElement> basis_elements() const;

  private:
    Subspace(AlgebraPtr parent, linalg::RowBasis basis)
        : parent_(std::move(parent)), basis_(std::move(basis)) {}

    AlgebraPtr parent_;
    linalg::RowBasis basis_;
};

/// Smallest subspace containing the generators and closed under the algebra
/// product, computed by span saturation to a fixed point.
Subspace subalgebra_closure(const std::vector<AlgebraElement> &generators);

bool subspace_contains(const Subspace &s, const AlgebraElement &x);

} // namespace orenil
