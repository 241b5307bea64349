#include "orenil/interpolation.hpp"

#include "orenil/errors.hpp"
#include "orenil/matrix.hpp"

namespace orenil {

RValuedPolynomial::RValuedPolynomial(AlgebraPtr parent,
                                     std::vector<AlgebraElement> coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
    for (const auto &c : coeffs_)
        if (c.parent() != parent_)
            throw ParentMismatch("RValuedPolynomial coefficient from a "
                                 "different algebra");
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

std::optional<std::size_t> RValuedPolynomial::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

AlgebraElement RValuedPolynomial::coefficient(std::size_t i) const {
    if (i >= coeffs_.size())
        return parent_->zero();
    return coeffs_[i];
}

AlgebraElement evaluate(const RValuedPolynomial &f, const Rational &lambda) {
    AlgebraElement acc = f.parent()->zero();
    // Horner form over the commuting scalar lambda.
    for (std::size_t i = f.coefficients().size(); i-- > 0;)
        acc = acc.scaled(lambda) + f.coefficients()[i];
    return acc;
}

RValuedPolynomial interpolate(const std::vector<Sample> &samples,
                              std::size_t degree_bound) {
    const std::size_t unknowns = degree_bound + 1;
    if (samples.size() < unknowns)
        throw Error("interpolate: need at least " + std::to_string(unknowns) +
                    " samples for degree bound " +
                    std::to_string(degree_bound));
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw DuplicatePoint("interpolate: repeated sample point " +
                                     samples[i].first.str());
    const AlgebraPtr parent = samples.front().second.parent();
    for (const auto &s : samples)
        if (s.second.parent() != parent)
            throw ParentMismatch("interpolate: samples from different "
                                 "algebras");
    const std::size_t dim = parent->dim();

    // Vandermonde system over Q; the R-valued unknowns are solved
    // coordinate-wise as multiple right-hand sides.
    QMat vandermonde(unknowns, QVec(unknowns, Rational(0)));
    QMat rhs(unknowns, QVec(dim, Rational(0)));
    for (std::size_t r = 0; r < unknowns; ++r) {
        Rational power(1);
        for (std::size_t c = 0; c < unknowns; ++c) {
            vandermonde[r][c] = power;
            power *= samples[r].first;
        }
        rhs[r] = samples[r].second.coords();
    }
    QMat solution = linalg::solve(std::move(vandermonde), std::move(rhs));

    std::vector<AlgebraElement> coeffs;
    coeffs.reserve(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i)
        coeffs.push_back(parent->element(solution[i]));
    RValuedPolynomial result(parent, std::move(coeffs));

    for (std::size_t s = unknowns; s < samples.size(); ++s)
        if (evaluate(result, samples[s].first) != samples[s].second)
            throw InconsistentSamples(
                "interpolate: sample at " + samples[s].first.str() +
                " does not lie on the degree-" + std::to_string(degree_bound) +
                " interpolant");
    return result;
}

bool is_identically_zero(const std::vector<Sample> &samples,
                         std::size_t degree_bound) {
    return interpolate(samples, degree_bound).is_zero();
}

} // namespace orenil
