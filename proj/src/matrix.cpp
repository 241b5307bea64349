#include "orenil/matrix.hpp"

#include "orenil/errors.hpp"

#include <algorithm>

namespace orenil::linalg {

namespace {

bool abs_num_less(const Rational &a, const Rational &b) {
    return cmp(abs(a.numerator()), abs(b.numerator())) < 0;
}

} // namespace

RowBasis rref(QMat m) {
    RowBasis out;
    if (m.empty())
        return out;
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        std::size_t best = m.size();
        for (std::size_t r = pivot_row; r < m.size(); ++r) {
            if (m[r][col].is_zero())
                continue;
            if (best == m.size() || abs_num_less(m[best][col], m[r][col]))
                best = r;
        }
        if (best == m.size())
            continue;
        std::swap(m[pivot_row], m[best]);
        const Rational inv = Rational(1) / m[pivot_row][col];
        for (std::size_t c = col; c < cols; ++c)
            m[pivot_row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][col].is_zero())
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[pivot_row][c];
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    m.resize(pivot_row);
    out.rows = std::move(m);
    return out;
}

bool reduce_in_place(const RowBasis &basis, QVec &v) {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const std::size_t col = basis.pivot_cols[i];
        if (v[col].is_zero())
            continue;
        const Rational factor = v[col];
        const QVec &row = basis.rows[i];
        for (std::size_t c = col; c < v.size(); ++c)
            v[c] -= factor * row[c];
    }
    return is_zero(v);
}

bool is_zero(const QVec &v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational &x) { return x.is_zero(); });
}

bool is_zero(const QMat &m) {
    return std::all_of(m.begin(), m.end(),
                       [](const QVec &row) { return is_zero(row); });
}

QMat mat_mul(const QMat &a, const QMat &b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    QMat out(n, QVec(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

QVec mat_apply(const QMat &m, const QVec &v) {
    QVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!m[i][j].is_zero() && !v[j].is_zero())
                out[i] += m[i][j] * v[j];
        }
    return out;
}

std::optional<unsigned> nilpotency_index(const QMat &m) {
    const std::size_t dim = m.size();
    if (dim == 0 || is_zero(m))
        return 1u;
    // Repeated squaring until a zero power or until the exponent reaches dim
    // (a nilpotent dim x dim matrix has index <= dim).
    struct Step {
        QMat power;
        unsigned exp;
    };
    std::vector<Step> steps{{m, 1}};
    while (!is_zero(steps.back().power)) {
        if (steps.back().exp >= dim)
            return std::nullopt;
        steps.push_back(
            {mat_mul(steps.back().power, steps.back().power),
             steps.back().exp * 2});
    }
    // steps.back() is the first zero power of two; find the largest exponent
    // e with m^e != 0 by adding smaller powers of two, then index = e + 1.
    const std::size_t j = steps.size() - 1; // m^(2^j) = 0, m^(2^(j-1)) != 0
    QMat base = steps[j - 1].power;
    unsigned e = steps[j - 1].exp;
    for (std::size_t s = j - 1; s-- > 0;) {
        QMat candidate = mat_mul(base, steps[s].power);
        if (!is_zero(candidate)) {
            base = std::move(candidate);
            e += steps[s].exp;
        }
    }
    return e + 1;
}

QMat solve(QMat a, QMat b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        throw Error("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        for (std::size_t r = col; r < n; ++r) {
            if (a[r][col].is_zero())
                continue;
            if (best == n || abs_num_less(a[best][col], a[r][col]))
                best = r;
        }
        if (best == n)
            throw Error("solve: singular matrix");
        std::swap(a[col], a[best]);
        std::swap(b[col], b[best]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t c = col; c < n; ++c)
            a[col][c] *= inv;
        for (auto &x : b[col])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            const Rational factor = a[r][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= factor * a[col][c];
            for (std::size_t c = 0; c < b[r].size(); ++c)
                b[r][c] -= factor * b[col][c];
        }
    }
    return b;
}

} // namespace orenil::linalg
