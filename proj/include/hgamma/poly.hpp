#pragma once

#include <map>

#include "hgamma/monomial.hpp"
#include "hgamma/qsqrt2.hpp"

namespace hgamma {

/// Sparse bivariate polynomial over Q(sqrt(2)). Terms are keyed by the
/// degree-lex position of their monomial, so iteration over terms() visits
/// monomials in degree-lex order; zero coefficients are never stored.
class Poly {
public:
    Poly() = default;

    static Poly constant(QSqrt2 c);
    /// c * z1^m z2^n (the zero polynomial when c = 0).
    static Poly monomial(unsigned long m, unsigned long n, QSqrt2 c = QSqrt2(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Total degree of the leading (degree-lex largest) term; 0 for the zero
    /// polynomial.
    unsigned long total_degree() const;

    /// Stored coefficient of z1^m z2^n, or exact zero when absent.
    QSqrt2 coefficient_at(unsigned long m, unsigned long n) const;

    /// Adds c to the coefficient of z1^m z2^n, pruning the term if the sum
    /// vanishes.
    void add_term(unsigned long m, unsigned long n, const QSqrt2& c);

    /// Terms in degree-lex order, keyed by linear monomial position.
    const std::map<unsigned long, QSqrt2>& terms() const { return terms_; }

    /// Exact value at the point (z1, z2).
    QSqrt2 evaluate(const QSqrt2& z1, const QSqrt2& z2) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly p, const Poly& q) {
        p += q;
        return p;
    }
    friend Poly operator-(Poly p, const Poly& q) {
        p -= q;
        return p;
    }
    friend Poly operator*(const Poly& p, const Poly& q);

    /// Structural equality; with pruning this coincides with mathematical
    /// equality.
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::map<unsigned long, QSqrt2> terms_;
};

/// Every coefficient of p multiplied by c exactly.
Poly scale(const QSqrt2& c, const Poly& p);

/// The weight f = 1 - (sqrt(2)/2) z1 - (sqrt(2)/2) z2 (1/sqrt(2) rationalized).
Poly weight_f();

/// The weight f^2, computed as weight_f() * weight_f().
Poly weight_f_squared();

}  // namespace hgamma
