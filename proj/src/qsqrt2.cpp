#include "hgamma/qsqrt2.hpp"

#include <cmath>

#include <mpfr.h>

#include "hgamma/errors.hpp"

namespace hgamma {

int QSqrt2::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Components disagree: the value has the sign of the larger of a^2 and
    // 2 b^2 (they cannot tie, since sqrt(2) is irrational and b != 0).
    const Rational a2 = a_ * a_;
    const Rational b2 = Rational(2) * b_ * b_;
    return a2 > b2 ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw DivisionByZeroError("division by zero in Q(sqrt(2))");
    const Rational d = a_ * a_ - Rational(2) * b_ * b_;
    return QSqrt2(a_ / d, -b_ / d);
}

double QSqrt2::to_double() const {
    mpfr_t acc, term;
    mpfr_init2(acc, 256);
    mpfr_init2(term, 256);
    mpfr_set_q(acc, a_.mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt_ui(term, 2, MPFR_RNDN);
    mpfr_mul_q(term, term, b_.mpq().get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
    const double d = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clear(acc);
    mpfr_clear(term);
    if (std::isinf(d)) throw OverflowError("value exceeds binary64 range");
    return d;
}

QSqrt2 inv_sqrt2_pow(unsigned long e) {
    mpz_class half_den;
    mpz_ui_pow_ui(half_den.get_mpz_t(), 2, (e + 1) / 2);
    const Rational mag(mpz_class(1), half_den);
    if (e % 2 == 0) return QSqrt2(mag);
    return QSqrt2(Rational(0), mag);
}

QSqrt2 pow(const QSqrt2& x, unsigned long e) {
    QSqrt2 r(1);
    for (unsigned long i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace hgamma
