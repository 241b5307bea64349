#include "orenil/rational.hpp"

#include "orenil/errors.hpp"

#include <ostream>

namespace orenil {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0)
        throw Error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_class q;
    try {
        q = mpq_class(std::string(text), 10);
    } catch (const std::invalid_argument &) {
        throw ParseError("invalid rational literal: \"" + std::string(text) +
                         "\"");
    }
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational literal: \"" +
                         std::string(text) + "\"");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational &Rational::operator+=(const Rational &o) {
    value_ += o.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    value_ -= o.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o) {
    value_ *= o.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero())
        throw Error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
}

Rational binomial(unsigned long n, unsigned long i) {
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), n, i);
    return Rational(result);
}

Rational generalized_binomial(std::int64_t e, unsigned long i) {
    mpz_class num(1);
    for (unsigned long t = 0; t < i; ++t)
        num *= mpz_class(static_cast<long>(e) - static_cast<long>(t));
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), i);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational factorial(unsigned long n) {
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return Rational(result);
}

} // namespace orenil
