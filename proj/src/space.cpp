#include "hgamma/space.hpp"

namespace hgamma {

Rational monomial_norm_sq(const Rational& gamma, unsigned long m, unsigned long n) {
    return Rational(mpz_class(factorial(m) * factorial(n))) / pochhammer(gamma, m + n);
}

QSqrt2 inner(const Rational& gamma, const Poly& p, const Poly& q) {
    const Poly& probe = p.term_count() <= q.term_count() ? p : q;
    const Poly& table = p.term_count() <= q.term_count() ? q : p;
    QSqrt2 acc(0);
    for (const auto& [idx, pc] : probe.terms()) {
        const auto it = table.terms().find(idx);
        if (it == table.terms().end()) continue;
        const MonomialIndex mi = monomial_at(idx);
        acc += pc * it->second * QSqrt2(monomial_norm_sq(gamma, mi.m, mi.n));
    }
    return acc;
}

Poly weight_poly(Weight w) {
    return w == Weight::F ? weight_f() : weight_f_squared();
}

QSqrt2 weighted_inner_by_expansion(const SpaceParams& params, const Poly& p, const Poly& q) {
    const Poly w = weight_poly(params.weight);
    return inner(params.gamma, p * w, q * w);
}

QSqrt2 weighted_inner(const SpaceParams& params, const Poly& p, const Poly& q) {
    if (params.weight != Weight::F) return weighted_inner_by_expansion(params, p, q);
    const QSqrt2 a(Rational(0), Rational(1, 2));  // sqrt(2)/2
    QSqrt2 acc(0);
    for (const auto& [pi, pc] : p.terms()) {
        const MonomialIndex pm = monomial_at(pi);
        for (const auto& [qi, qc] : q.terms()) {
            const MonomialIndex qm = monomial_at(qi);
            const QSqrt2 v = monomial_weighted_inner(params.gamma, a, pm.m, pm.n, qm.m, qm.n);
            if (!v.is_zero()) acc += pc * qc * v;
        }
    }
    return acc;
}

QSqrt2 monomial_weighted_inner(const Rational& gamma, const QSqrt2& a, unsigned long j,
                               unsigned long k, unsigned long m, unsigned long n) {
    if (m == j && n == k) {
        const QSqrt2 a_sq = a * a;
        return QSqrt2(monomial_norm_sq(gamma, j, k)) +
               a_sq * QSqrt2(monomial_norm_sq(gamma, j + 1, k)) +
               a_sq * QSqrt2(monomial_norm_sq(gamma, j, k + 1));
    }
    // The monomial one step below on either axis meets the cross term whose
    // norm is that of z1^j z2^k itself.
    if ((m + 1 == j && n == k) || (m == j && n + 1 == k))
        return -a * QSqrt2(monomial_norm_sq(gamma, j, k));
    if (m == j + 1 && n == k) return -a * QSqrt2(monomial_norm_sq(gamma, j + 1, k));
    if (m == j && n == k + 1) return -a * QSqrt2(monomial_norm_sq(gamma, j, k + 1));
    // Diagonal neighbours within the same total degree: both cross terms land
    // on the same monomial.
    if (m == j + 1 && n + 1 == k) return a * a * QSqrt2(monomial_norm_sq(gamma, j + 1, k));
    if (m + 1 == j && n == k + 1) return a * a * QSqrt2(monomial_norm_sq(gamma, j, k + 1));
    return QSqrt2(0);
}

}  // namespace hgamma
