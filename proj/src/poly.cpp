#include "hgamma/poly.hpp"

namespace hgamma {

Poly Poly::constant(QSqrt2 c) { return monomial(0, 0, std::move(c)); }

Poly Poly::monomial(unsigned long m, unsigned long n, QSqrt2 c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(index_of(m, n), std::move(c));
    return p;
}

unsigned long Poly::total_degree() const {
    if (terms_.empty()) return 0;
    return monomial_at(terms_.rbegin()->first).degree();
}

QSqrt2 Poly::coefficient_at(unsigned long m, unsigned long n) const {
    const auto it = terms_.find(index_of(m, n));
    return it == terms_.end() ? QSqrt2(0) : it->second;
}

void Poly::add_term(unsigned long m, unsigned long n, const QSqrt2& c) {
    if (c.is_zero()) return;
    const unsigned long idx = index_of(m, n);
    const auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSqrt2 Poly::evaluate(const QSqrt2& z1, const QSqrt2& z2) const {
    QSqrt2 acc(0);
    for (const auto& [idx, coeff] : terms_) {
        const MonomialIndex mi = monomial_at(idx);
        acc += coeff * pow(z1, mi.m) * pow(z2, mi.n);
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [idx, coeff] : o.terms_) {
        const auto [it, inserted] = terms_.emplace(idx, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [idx, coeff] : o.terms_) {
        const auto [it, inserted] = terms_.emplace(idx, -coeff);
        if (!inserted) {
            it->second -= coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [idx, coeff] : terms_) r.terms_.emplace(idx, -coeff);
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [pi, pc] : p.terms_) {
        const MonomialIndex pm = monomial_at(pi);
        for (const auto& [qi, qc] : q.terms_) {
            const MonomialIndex qm = monomial_at(qi);
            r.add_term(pm.m + qm.m, pm.n + qm.n, pc * qc);
        }
    }
    return r;
}

Poly scale(const QSqrt2& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [idx, coeff] : p.terms()) {
        const MonomialIndex mi = monomial_at(idx);
        r.add_term(mi.m, mi.n, c * coeff);
    }
    return r;
}

Poly weight_f() {
    const QSqrt2 half_sqrt2(Rational(0), Rational(1, 2));
    Poly f = Poly::constant(QSqrt2(1));
    f.add_term(1, 0, -half_sqrt2);
    f.add_term(0, 1, -half_sqrt2);
    return f;
}

Poly weight_f_squared() {
    const Poly f = weight_f();
    return f * f;
}

}  // namespace hgamma
