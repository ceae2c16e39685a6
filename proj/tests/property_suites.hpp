#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each suite draws from the supplied engine, stops at the first
// violated case, and reports it through `detail`.

#include <random>
#include <string>

#include "hgamma/monomial.hpp"
#include "hgamma/poly.hpp"
#include "hgamma/qsqrt2.hpp"
#include "hgamma/space.hpp"

namespace props {

inline hgamma::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 999);
    return hgamma::Rational(num(rng), den(rng));
}

inline hgamma::QSqrt2 random_qsqrt2(std::mt19937_64& rng) {
    return hgamma::QSqrt2(random_rational(rng), random_rational(rng));
}

inline hgamma::Poly random_poly(std::mt19937_64& rng, unsigned long max_exp = 5,
                                int max_terms = 6) {
    std::uniform_int_distribution<unsigned long> exp(0, max_exp);
    std::uniform_int_distribution<int> count(0, max_terms);
    hgamma::Poly p;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) p.add_term(exp(rng), exp(rng), random_qsqrt2(rng));
    return p;
}

/// Componentwise canonical storage: positive, coprime denominators.
inline bool is_reduced(const hgamma::QSqrt2& v) {
    const auto reduced = [](const hgamma::Rational& r) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
        return r.den() > 0 && g == 1;
    };
    return reduced(v.a()) && reduced(v.b());
}

inline bool field_axioms(std::mt19937_64& rng, int cases, std::string& detail) {
    using hgamma::QSqrt2;
    for (int i = 0; i < cases; ++i) {
        const QSqrt2 x = random_qsqrt2(rng), y = random_qsqrt2(rng), z = random_qsqrt2(rng);
        const bool ok = (x + y) + z == x + (y + z) && x + y == y + x && (x * y) * z == x * (y * z) &&
                        x * y == y * x && x * (y + z) == x * y + x * z &&
                        (x.is_zero() || x * x.inverse() == QSqrt2(1)) && is_reduced(x + y) &&
                        is_reduced(x * y);
        if (!ok) {
            detail = "field axiom violated at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

inline bool monomial_round_trip(std::mt19937_64& rng, int cases, std::string& detail) {
    using namespace hgamma;
    std::uniform_int_distribution<unsigned long> exp(0, 100);
    for (int i = 0; i < cases; ++i) {
        const unsigned long m = exp(rng), n = exp(rng);
        const MonomialIndex back = monomial_at(index_of(m, n));
        if (back.m != m || back.n != n) {
            detail = "round trip failed at m=" + std::to_string(m) + " n=" + std::to_string(n);
            return false;
        }
        const MonomialIndex other{exp(rng), exp(rng)};
        const MonomialIndex mine{m, n};
        // Trichotomy, and strictly smaller total degree forces precedence.
        const int ways = (precedes(mine, other) ? 1 : 0) + (precedes(other, mine) ? 1 : 0) +
                         (mine == other ? 1 : 0);
        const bool order_ok =
            ways == 1 && (mine.degree() >= other.degree() || precedes(mine, other));
        if (!order_ok) {
            detail = "order violated at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

inline bool poly_ring_axioms(std::mt19937_64& rng, int cases, std::string& detail) {
    using hgamma::Poly;
    const auto pruned = [](const Poly& p) {
        for (const auto& [idx, coeff] : p.terms()) {
            (void)idx;
            if (coeff.is_zero()) return false;
        }
        return true;
    };
    for (int i = 0; i < cases; ++i) {
        const Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        const bool ok = (p + q) + r == p + (q + r) && p + q == q + p && p * q == q * p &&
                        (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r &&
                        pruned(p + q) && pruned(p * q) && pruned(p - p) && (p - p).is_zero();
        if (!ok) {
            detail = "ring axiom violated at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

inline bool inner_product_suite(std::mt19937_64& rng, int cases, std::string& detail) {
    using namespace hgamma;
    std::uniform_int_distribution<long> gamma_num(1, 9);
    std::uniform_int_distribution<long> gamma_den(1, 4);
    for (int i = 0; i < cases; ++i) {
        const SpaceParams params{Rational(gamma_num(rng), gamma_den(rng)), Weight::F};
        const Poly p = random_poly(rng, 4, 4), q = random_poly(rng, 4, 4), r = random_poly(rng, 4, 4);
        if (weighted_inner(params, p, q) != weighted_inner(params, q, p)) {
            detail = "symmetry violated at case " + std::to_string(i);
            return false;
        }
        if (!p.is_zero() && weighted_inner(params, p, p).sign() != 1) {
            detail = "positivity violated aborting at case " + std::to_string(i);
            return false;
        }
        const QSqrt2 alpha = random_qsqrt2(rng), beta = random_qsqrt2(rng);
        const QSqrt2 lhs = weighted_inner(params, scale(alpha, p) + scale(beta, q), r);
        const QSqrt2 rhs = alpha * weighted_inner(params, p, r) + beta * weighted_inner(params, q, r);
        if (lhs != rhs) {
            detail = "bilinearity violated at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace props
