#pragma once

#include "orenil/algebra.hpp"
#include "orenil/matrix.hpp"

#include <memory>
#include <optional>

namespace orenil {

class Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// Q-linear map d on an Algebra satisfying the Leibniz rule
/// d(xy) = d(x)y + x d(y). Represented by its matrix (column j holds the
/// coordinates of d(e_j)); the rule is validated on all basis pairs at
/// construction. Whether the matrix is nilpotent (equivalently, whether d is
/// locally nilpotent on the whole finite-dimensional algebra) is computed
/// once and cached.
class Derivation : public std::enable_shared_from_this<Derivation> {
  public:
    static DerivationPtr create(AlgebraPtr parent, QMat matrix);

    const AlgebraPtr &parent() const { return parent_; }
    const QMat &matrix() const { return matrix_; }

    AlgebraElement apply(const AlgebraElement &r) const;

    bool locally_nilpotent() const { return matrix_nilindex_.has_value(); }
    /// Least t with d^t = 0 as a linear map, when d is nilpotent.
    std::optional<unsigned> matrix_nilpotency_index() const {
        return matrix_nilindex_;
    }

  private:
    struct Private {};

  public:
    Derivation(Private, AlgebraPtr parent, QMat matrix,
               std::optional<unsigned> nilindex);

  private:
    AlgebraPtr parent_;
    QMat matrix_;
    std::optional<unsigned> matrix_nilindex_;
};

/// Validates the Leibniz rule on all basis pairs; throws LeibnizViolation
/// naming the offending pair.
DerivationPtr make_derivation(const AlgebraPtr &parent, const QMat &matrix);

/// The inner derivation r -> m*r - r*m.
DerivationPtr inner_derivation(const AlgebraElement &m);

/// d^i(r); i = 0 returns r unchanged.
AlgebraElement apply_power(const DerivationPtr &d, const AlgebraElement &r,
                           unsigned i);

/// Least k >= 0 with d^{k+1}(a) = 0 when found within the bound.
std::optional<unsigned> local_nilpotency_index(const DerivationPtr &d,
                                               const AlgebraElement &a,
                                               unsigned bound);

/// True iff every basis element has a local nilpotency index within the
/// bound; cross-checked against nilpotency of the derivation matrix.
bool is_locally_nilpotent(const DerivationPtr &d, unsigned bound);

} // namespace orenil
