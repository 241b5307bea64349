#pragma once

#include "orenil/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orenil {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

namespace linalg {

/// Reduced row-echelon form over Q. Zero rows are dropped, pivots are 1 and
/// alone in their column, pivot columns strictly increase. The result is the
/// canonical basis of the row space: equal row spaces give identical output.
struct RowBasis {
    QMat rows;
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const { return rows.size(); }
};

RowBasis rref(QMat m);

/// Reduces v against the basis in place; returns true when the remainder is
/// zero, i.e. v lies in the row space.
bool reduce_in_place(const RowBasis &basis, QVec &v);

bool is_zero(const QVec &v);
bool is_zero(const QMat &m);

QMat mat_mul(const QMat &a, const QMat &b);

/// Matrix-vector product (m columns applied to coords).
QVec mat_apply(const QMat &m, const QVec &v);

/// Least t >= 1 with m^t = 0, if m is nilpotent (t <= dim always holds then).
std::optional<unsigned> nilpotency_index(const QMat &m);

/// Solves A X = B exactly for square nonsingular A; B holds one column per
/// right-hand side. Pivot choice: nonzero entry with the largest |numerator|.
/// Throws Error if A is singular.
QMat solve(QMat a, QMat b);

} // namespace linalg

} // namespace orenil
