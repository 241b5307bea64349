#include "orenil/derivation.hpp"

#include "orenil/errors.hpp"

#include <sstream>

namespace orenil {

Derivation::Derivation(Private, AlgebraPtr parent, QMat matrix,
                       std::optional<unsigned> nilindex)
    : parent_(std::move(parent)), matrix_(std::move(matrix)),
      matrix_nilindex_(nilindex) {}

DerivationPtr Derivation::create(AlgebraPtr parent, QMat matrix) {
    const std::size_t dim = parent->dim();
    if (matrix.size() != dim)
        throw DimensionMismatch("derivation matrix must be " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim));
    for (const auto &row : matrix)
        if (row.size() != dim)
            throw DimensionMismatch("derivation matrix row has wrong length");

    // Leibniz on basis pairs: d(e_i e_j) = d(e_i) e_j + e_i d(e_j).
    auto d_of_basis = [&](std::size_t j) {
        QVec out(dim, Rational(0));
        for (std::size_t r = 0; r < dim; ++r)
            out[r] = matrix[r][j];
        return out;
    };
    for (std::size_t i = 0; i < dim; ++i) {
        const QVec di = d_of_basis(i);
        for (std::size_t j = 0; j < dim; ++j) {
            const QVec dj = d_of_basis(j);
            QVec product(dim, Rational(0));
            for (const auto &[l, c] : parent->basis_product(i, j))
                product[l] = c;
            QVec lhs = linalg::mat_apply(matrix, product);
            QVec ei(dim, Rational(0)), ej(dim, Rational(0));
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            QVec rhs = parent->mul_coords(di, ej);
            const QVec second = parent->mul_coords(ei, dj);
            for (std::size_t r = 0; r < dim; ++r)
                rhs[r] += second[r];
            if (lhs != rhs) {
                std::ostringstream os;
                os << "Leibniz rule fails at basis pair ("
                   << parent->labels()[i] << ", " << parent->labels()[j]
                   << "): d(" << parent->labels()[i] << "*"
                   << parent->labels()[j] << ") = "
                   << parent->element(lhs).str() << " but d(" <<
                    parent->labels()[i] << ")*" << parent->labels()[j] << " + "
                   << parent->labels()[i] << "*d(" << parent->labels()[j]
                   << ") = " << parent->element(rhs).str();
                throw LeibnizViolation(os.str());
            }
        }
    }

    auto nilindex = linalg::nilpotency_index(matrix);
    return std::make_shared<Derivation>(Private{}, std::move(parent),
                                        std::move(matrix), nilindex);
}

AlgebraElement Derivation::apply(const AlgebraElement &r) const {
    if (r.parent() != parent_)
        throw ParentMismatch("derivation applied across algebras");
    return AlgebraElement(parent_, linalg::mat_apply(matrix_, r.coords()));
}

DerivationPtr make_derivation(const AlgebraPtr &parent, const QMat &matrix) {
    return Derivation::create(parent, matrix);
}

DerivationPtr inner_derivation(const AlgebraElement &m) {
    const AlgebraPtr parent = m.parent();
    const std::size_t dim = parent->dim();
    QMat matrix(dim, QVec(dim, Rational(0)));
    for (std::size_t j = 0; j < dim; ++j) {
        QVec ej(dim, Rational(0));
        ej[j] = Rational(1);
        QVec left = parent->mul_coords(m.coords(), ej);
        QVec right = parent->mul_coords(ej, m.coords());
        for (std::size_t r = 0; r < dim; ++r)
            matrix[r][j] = left[r] - right[r];
    }
    return Derivation::create(parent, std::move(matrix));
}

AlgebraElement apply_power(const DerivationPtr &d, const AlgebraElement &r,
                           unsigned i) {
    AlgebraElement out = r;
    if (r.parent() != d->parent())
        throw ParentMismatch("apply_power across algebras");
    for (unsigned t = 0; t < i; ++t)
        out = d->apply(out);
    return out;
}

std::optional<unsigned> local_nilpotency_index(const DerivationPtr &d,
                                               const AlgebraElement &a,
                                               unsigned bound) {
    AlgebraElement current = d->apply(a);
    for (unsigned k = 0; k <= bound; ++k) {
        if (current.is_zero())
            return k;
        current = d->apply(current);
    }
    return std::nullopt;
}

bool is_locally_nilpotent(const DerivationPtr &d, unsigned bound) {
    const std::size_t dim = d->parent()->dim();
    bool per_basis = true;
    for (std::size_t i = 0; i < dim && per_basis; ++i)
        per_basis = local_nilpotency_index(d, d->parent()->basis(i), bound)
                        .has_value();
    return per_basis && d->locally_nilpotent();
}

} // namespace orenil
