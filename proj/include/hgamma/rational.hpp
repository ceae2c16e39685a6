#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "hgamma/errors.hpp"

namespace hgamma {

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. Thin value wrapper around GMP's mpq_class that
/// enforces canonical form on every construction path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, keeps formulas readable
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p" or "p/q" in base 10 with an optional leading '-'.
    /// Throws std::invalid_argument on malformed input and
    /// DivisionByZeroError on a zero denominator.
    static Rational from_string(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    std::string str() const;           // "p" when q == 1, else "p/q"
    std::string fraction_str() const;  // always "p/q"

    /// Nearest binary64. Throws OverflowError when the magnitude exceeds
    /// the double range.
    double to_double() const;

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ + y.v_));
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ - y.v_));
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.v_ * y.v_));
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        Rational r = x;
        r /= y;
        return r;
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) == 0; }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) < 0; }
    friend bool operator<=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) <= 0; }
    friend bool operator>(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) > 0; }
    friend bool operator>=(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) >= 0; }

    /// Underlying canonical mpq value (read-only).
    const mpq_class& mpq() const { return v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}  // assumes canonical input

    mpq_class v_;
};

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

/// Rising factorial x(x+1)...(x+n-1); the empty product (n = 0) is 1.
Rational pochhammer(const Rational& x, unsigned long n);

}  // namespace hgamma
