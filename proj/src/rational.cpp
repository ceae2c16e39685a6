#include "hgamma/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>

namespace hgamma {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational: \"" + std::string(s) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rational::to_double() const {
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    if (std::isinf(d)) throw OverflowError("rational exceeds binary64 range");
    return d;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pochhammer(const Rational& x, unsigned long n) {
    Rational r = 1;
    Rational term = x;
    for (unsigned long i = 0; i < n; ++i) {
        r *= term;
        term += 1;
    }
    return r;
}

}  // namespace hgamma
