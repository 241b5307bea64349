#pragma once

#include "orenil/matrix.hpp"
#include "orenil/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orenil {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of a finite-dimensional Q-algebra: a coordinate vector over the
/// parent's basis. Immutable value; exact coordinate-wise equality.
class AlgebraElement {
  public:
    AlgebraElement(AlgebraPtr parent, QVec coords);

    const AlgebraPtr &parent() const { return parent_; }
    const QVec &coords() const { return coords_; }
    bool is_zero() const { return linalg::is_zero(coords_); }

    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator-(const AlgebraElement &o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Rational &c) const;

    friend bool operator==(const AlgebraElement &a, const AlgebraElement &b) {
        return a.parent_ == b.parent_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const AlgebraElement &a, const AlgebraElement &b) {
        return !(a == b);
    }

    /// Human-readable form, e.g. "u + 2*v" or "0".
    std::string str() const;

  private:
    AlgebraPtr parent_;
    QVec coords_;
};

/// Finite-dimensional Q-algebra presented by structure constants
/// e_i * e_j = sum_l c_{ij}^l e_l. Not required to be unital or commutative;
/// associativity over all basis triples is validated at construction.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    /// Sparse structure-constant row: (basis index, coefficient) pairs,
    /// sorted by index, no zero coefficients.
    using SparseProduct = std::vector<std::pair<std::size_t, Rational>>;

    static AlgebraPtr create(std::size_t dim,
                             const std::vector<std::vector<QVec>> &table,
                             std::vector<std::string> labels);
    static AlgebraPtr
    create_sparse(std::size_t dim,
                  std::vector<std::vector<SparseProduct>> table,
                  std::vector<std::string> labels);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string> &labels() const { return labels_; }
    std::optional<std::size_t> label_index(std::string_view label) const;

    AlgebraElement element(QVec coords) const;
    AlgebraElement zero() const;
    AlgebraElement basis(std::size_t i) const;
    const SparseProduct &basis_product(std::size_t i, std::size_t j) const {
        return table_[i][j];
    }

    /// Bilinear product of coordinate vectors via the structure constants.
    QVec mul_coords(const QVec &x, const QVec &y) const;

  private:
    struct Private {};

  public:
    Algebra(Private, std::size_t dim,
            std::vector<std::vector<SparseProduct>> table,
            std::vector<std::string> labels);

  private:
    void validate() const;

    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseProduct>> table_;
};

/// Builds and validates an algebra from a dense structure-constant table;
/// table[i][j] holds the coordinates of e_i * e_j.
AlgebraPtr make_algebra(std::size_t dim,
                        const std::vector<std::vector<QVec>> &table,
                        std::vector<std::string> labels);

AlgebraElement mul_elements(const AlgebraElement &x, const AlgebraElement &y);

/// m-fold product x^m, m >= 1.
AlgebraElement power(const AlgebraElement &x, unsigned m);

/// Least m <= bound with x^m = 0, or nullopt if none exists up to the bound.
std::optional<unsigned> element_nilpotency_index(const AlgebraElement &x,
                                                 unsigned bound);

/// Free associative algebra on `generators` symbols truncated above word
/// length `truncation_class`: basis = words of length 1..class, product =
/// concatenation (zero when too long). Throws SizeExceeded over the cap.
AlgebraPtr free_nilpotent_algebra(unsigned generators,
                                  unsigned truncation_class,
                                  std::size_t dim_cap = 512);

/// The 3-dimensional algebra span{u, v, w} with u*v = w and all other basis
/// products zero.
AlgebraPtr heisenberg_algebra();

/// Least s with R^s = 0 (every product of s elements vanishes), or nullopt
/// when R is not nilpotent. Computed from the exact chain R ⊇ R² ⊇ R³ ⊇ ...
std::optional<unsigned> algebra_nilpotency_class(const AlgebraPtr &algebra);

} // namespace orenil
