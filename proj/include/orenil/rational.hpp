#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orenil {

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: stored in lowest terms, denominator > 0. All arithmetic is
/// exact; there is no rounding anywhere in the library.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(n) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : value_(n) {}
    explicit Rational(mpq_class q);

    /// Parses "p/q" or "p" (base 10). Throws ParseError on malformed input
    /// or zero denominator.
    static Rational from_string(std::string_view text);

    const mpz_class &numerator() const { return value_.get_num(); }
    const mpz_class &denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    /// Throws Error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational &a, const Rational &b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational &a, const Rational &b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Rational &a, const Rational &b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const Rational &a, const Rational &b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const Rational &a, const Rational &b) {
        return a.value_ >= b.value_;
    }

    friend Rational abs(const Rational &a) {
        return Rational(mpq_class(abs(a.value_)));
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

  private:
    mpq_class value_; // canonical: lowest terms, positive denominator
};

/// Exact binomial coefficient C(n, i); zero when i > n.
Rational binomial(unsigned long n, unsigned long i);

/// Generalized binomial C(e, i) = e(e-1)...(e-i+1)/i! for any integer e.
/// For e >= 0 agrees with binomial(e, i); for e < 0 it is the coefficient in
/// the Laurent commutation rule, e.g. C(-1, i) = (-1)^i.
Rational generalized_binomial(std::int64_t e, unsigned long i);

/// Exact factorial as a Rational.
Rational factorial(unsigned long n);

} // namespace orenil
