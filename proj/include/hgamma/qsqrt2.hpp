#pragma once

#include <utility>

#include "hgamma/rational.hpp"

namespace hgamma {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt(2)).
/// The pair (a, b) is determined by the value, so equality is componentwise.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long n) : a_(n) {}  // NOLINT: implicit by design
    QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(2): when a and b disagree in sign, decided
    /// by comparing a^2 against 2 b^2.
    int sign() const;

    /// Multiplicative inverse via the conjugate: (a - b*sqrt(2)) / (a^2 - 2 b^2).
    /// Throws DivisionByZeroError on zero.
    QSqrt2 inverse() const;

    /// Nearest binary64 to a + b*sqrt(2); throws OverflowError out of range.
    double to_double() const;

    QSqrt2& operator+=(const QSqrt2& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QSqrt2& operator-=(const QSqrt2& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QSqrt2& operator*=(const QSqrt2& o) {
        *this = *this * o;
        return *this;
    }
    QSqrt2& operator/=(const QSqrt2& o) {
        *this = *this * o.inverse();
        return *this;
    }

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

private:
    Rational a_;
    Rational b_;
};

/// (sqrt(2)/2)^e expressed exactly: 2^(-e/2) for even e, 2^(-(e+1)/2) * sqrt(2)
/// for odd e.
QSqrt2 inv_sqrt2_pow(unsigned long e);

QSqrt2 pow(const QSqrt2& x, unsigned long e);

}  // namespace hgamma
