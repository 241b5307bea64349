#include "orenil/algebra.hpp"

#include "orenil/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orenil {

namespace {

// Sparse linear combination accumulator used by the associativity check;
// avoids allocating dense vectors for every basis triple.
using SparseTerms = std::vector<std::pair<std::size_t, Rational>>;

void accumulate(SparseTerms &acc, const Rational &scale,
                const Algebra::SparseProduct &row) {
    for (const auto &[idx, coeff] : row)
        acc.emplace_back(idx, scale * coeff);
}

SparseTerms normalize(SparseTerms terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    SparseTerms out;
    for (auto &term : terms) {
        if (!out.empty() && out.back().first == term.first)
            out.back().second += term.second;
        else
            out.push_back(std::move(term));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto &t) { return t.second.is_zero(); }),
              out.end());
    return out;
}

std::string sparse_str(const SparseTerms &terms,
                       const std::vector<std::string> &labels) {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[idx, coeff] : terms) {
        if (!first)
            os << " + ";
        first = false;
        if (coeff == Rational(1))
            os << labels[idx];
        else
            os << coeff.str() << "*" << labels[idx];
    }
    return os.str();
}

} // namespace

AlgebraElement::AlgebraElement(AlgebraPtr parent, QVec coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (!parent_)
        throw Error("AlgebraElement: null parent");
    if (coords_.size() != parent_->dim())
        throw DimensionMismatch("AlgebraElement: expected " +
                                std::to_string(parent_->dim()) +
                                " coordinates, got " +
                                std::to_string(coords_.size()));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const {
    if (parent_ != o.parent_)
        throw ParentMismatch("AlgebraElement addition across algebras");
    QVec out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += o.coords_[i];
    return AlgebraElement(parent_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement &o) const {
    if (parent_ != o.parent_)
        throw ParentMismatch("AlgebraElement subtraction across algebras");
    QVec out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= o.coords_[i];
    return AlgebraElement(parent_, std::move(out));
}

AlgebraElement AlgebraElement::operator-() const {
    return scaled(Rational(-1));
}

AlgebraElement AlgebraElement::scaled(const Rational &c) const {
    QVec out = coords_;
    for (auto &x : out)
        x *= c;
    return AlgebraElement(parent_, std::move(out));
}

std::string AlgebraElement::str() const {
    SparseTerms terms;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            terms.emplace_back(i, coords_[i]);
    return sparse_str(terms, parent_->labels());
}

Algebra::Algebra(Private, std::size_t dim,
                 std::vector<std::vector<SparseProduct>> table,
                 std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(std::move(table)) {}

AlgebraPtr Algebra::create(std::size_t dim,
                           const std::vector<std::vector<QVec>> &table,
                           std::vector<std::string> labels) {
    if (table.size() != dim)
        throw DimensionMismatch("structure-constant table has " +
                                std::to_string(table.size()) +
                                " rows, expected " + std::to_string(dim));
    std::vector<std::vector<SparseProduct>> sparse(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim)
            throw DimensionMismatch("structure-constant row " +
                                    std::to_string(i) + " has " +
                                    std::to_string(table[i].size()) +
                                    " entries, expected " +
                                    std::to_string(dim));
        sparse[i].resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (table[i][j].size() != dim)
                throw DimensionMismatch(
                    "product coordinates for (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") have wrong length");
            for (std::size_t l = 0; l < dim; ++l)
                if (!table[i][j][l].is_zero())
                    sparse[i][j].emplace_back(l, table[i][j][l]);
        }
    }
    return create_sparse(dim, std::move(sparse), std::move(labels));
}

AlgebraPtr Algebra::create_sparse(std::size_t dim,
                                  std::vector<std::vector<SparseProduct>> table,
                                  std::vector<std::string> labels) {
    if (dim == 0)
        throw DimensionMismatch("algebra dimension must be positive");
    if (labels.size() != dim)
        throw DimensionMismatch("expected " + std::to_string(dim) +
                                " basis labels, got " +
                                std::to_string(labels.size()));
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error("basis labels must be distinct");
    }
    auto algebra = std::make_shared<Algebra>(Private{}, dim, std::move(table),
                                             std::move(labels));
    algebra->validate();
    return algebra;
}

void Algebra::validate() const {
    // Exhaustive associativity check: (e_i e_j) e_k = e_i (e_j e_k).
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                SparseTerms lhs, rhs;
                for (const auto &[l, c] : table_[i][j])
                    accumulate(lhs, c, table_[l][k]);
                for (const auto &[l, c] : table_[j][k])
                    accumulate(rhs, c, table_[i][l]);
                SparseTerms left = normalize(std::move(lhs));
                SparseTerms right = normalize(std::move(rhs));
                if (left != right) {
                    std::ostringstream os;
                    os << "associativity fails at basis triple (" << labels_[i]
                       << ", " << labels_[j] << ", " << labels_[k] << "): ("
                       << labels_[i] << "*" << labels_[j] << ")*" << labels_[k]
                       << " = " << sparse_str(left, labels_) << " but "
                       << labels_[i] << "*(" << labels_[j] << "*" << labels_[k]
                       << ") = " << sparse_str(right, labels_);
                    throw AssociativityViolation(os.str());
                }
            }
}

std::optional<std::size_t> Algebra::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

AlgebraElement Algebra::element(QVec coords) const {
    return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement Algebra::zero() const {
    return element(QVec(dim_, Rational(0)));
}

AlgebraElement Algebra::basis(std::size_t i) const {
    QVec coords(dim_, Rational(0));
    coords.at(i) = Rational(1);
    return element(std::move(coords));
}

QVec Algebra::mul_coords(const QVec &x, const QVec &y) const {
    QVec out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            const Rational scale = x[i] * y[j];
            for (const auto &[l, c] : table_[i][j])
                out[l] += scale * c;
        }
    }
    return out;
}

AlgebraPtr make_algebra(std::size_t dim,
                        const std::vector<std::vector<QVec>> &table,
                        std::vector<std::string> labels) {
    return Algebra::create(dim, table, std::move(labels));
}

AlgebraElement mul_elements(const AlgebraElement &x, const AlgebraElement &y) {
    if (x.parent() != y.parent())
        throw ParentMismatch("mul_elements across algebras");
    return AlgebraElement(x.parent(),
                          x.parent()->mul_coords(x.coords(), y.coords()));
}

AlgebraElement power(const AlgebraElement &x, unsigned m) {
    if (m == 0)
        throw Error("power: exponent must be >= 1");
    AlgebraElement acc = x;
    for (unsigned i = 1; i < m; ++i)
        acc = mul_elements(acc, x);
    return acc;
}

std::optional<unsigned> element_nilpotency_index(const AlgebraElement &x,
                                                 unsigned bound) {
    if (bound == 0)
        throw Error("element_nilpotency_index: bound must be >= 1");
    AlgebraElement acc = x;
    for (unsigned m = 1; m <= bound; ++m) {
        if (acc.is_zero())
            return m;
        if (m < bound)
            acc = mul_elements(acc, x);
    }
    return std::nullopt;
}

AlgebraPtr free_nilpotent_algebra(unsigned generators,
                                  unsigned truncation_class,
                                  std::size_t dim_cap) {
    if (generators == 0 || truncation_class == 0)
        throw Error("free_nilpotent_algebra: parameters must be >= 1");

    std::vector<std::string> gen_names;
    for (unsigned i = 0; i < generators; ++i) {
        if (generators == 1)
            gen_names.push_back("t");
        else if (generators <= 26)
            gen_names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            gen_names.push_back("x" + std::to_string(i + 1));
    }
    const bool dotted = generators > 26;

    // Enumerate words of length 1..class in length-major lexicographic order.
    std::vector<std::vector<unsigned>> words;
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<std::vector<unsigned>> layer;
    for (unsigned len = 1; len <= truncation_class; ++len) {
        std::vector<std::vector<unsigned>> next;
        if (len == 1) {
            for (unsigned g = 0; g < generators; ++g)
                next.push_back({g});
        } else {
            for (const auto &w : layer)
                for (unsigned g = 0; g < generators; ++g) {
                    auto extended = w;
                    extended.push_back(g);
                    next.push_back(std::move(extended));
                }
        }
        for (auto &w : next) {
            if (words.size() >= dim_cap)
                throw SizeExceeded(
                    "free_nilpotent_algebra: basis would exceed cap of " +
                    std::to_string(dim_cap) + " words");
            index[w] = words.size();
            words.push_back(w);
        }
        layer = std::move(next);
    }

    const std::size_t dim = words.size();
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::string label;
        for (std::size_t p = 0; p < words[i].size(); ++p) {
            if (dotted && p > 0)
                label += '.';
            label += gen_names[words[i][p]];
        }
        labels[i] = std::move(label);
    }

    std::vector<std::vector<Algebra::SparseProduct>> table(
        dim, std::vector<Algebra::SparseProduct>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (words[i].size() + words[j].size() > truncation_class)
                continue;
            auto concat = words[i];
            concat.insert(concat.end(), words[j].begin(), words[j].end());
            table[i][j].emplace_back(index.at(concat), Rational(1));
        }

    return Algebra::create_sparse(dim, std::move(table), std::move(labels));
}

AlgebraPtr heisenberg_algebra() {
    std::vector<std::vector<Algebra::SparseProduct>> table(
        3, std::vector<Algebra::SparseProduct>(3));
    table[0][1].emplace_back(2, Rational(1)); // u*v = w
    return Algebra::create_sparse(3, std::move(table), {"u", "v", "w"});
}

std::optional<unsigned> algebra_nilpotency_class(const AlgebraPtr &algebra) {
    const std::size_t dim = algebra->dim();
    // Chain R, R^2, R^3, ... as exact row spaces; R^{t+1} is spanned by
    // e_i * w over basis elements e_i and a basis {w} of R^t.
    QMat current(dim, QVec(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i)
        current[i][i] = Rational(1);
    unsigned s = 1;
    while (true) {
        if (current.empty())
            return s;
        QMat products;
        for (std::size_t i = 0; i < dim; ++i) {
            QVec basis_coords(dim, Rational(0));
            basis_coords[i] = Rational(1);
            for (const auto &row : current)
                products.push_back(algebra->mul_coords(basis_coords, row));
        }
        auto next = linalg::rref(std::move(products));
        if (next.rank() == current.size()) // stabilized above zero
            return std::nullopt;
        current = std::move(next.rows);
        ++s;
    }
}

} // namespace orenil
