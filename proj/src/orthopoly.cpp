#include "hgamma/orthopoly.hpp"

#include "hgamma/errors.hpp"

namespace hgamma {

Rational orthopoly_norm_sq(const Rational& gamma, unsigned long j, unsigned long k) {
    const Rational s(static_cast<long>(j + k));
    return (gamma + s + 1) / (gamma + s) * Rational(mpz_class(factorial(j) * factorial(k))) /
           pochhammer(gamma, j + k);
}

OrthoPoly orthopoly_closed_form(const Rational& gamma, unsigned long j, unsigned long k) {
    Poly p;
    const Rational poch_top = pochhammer(gamma, j + k + 1);
    const mpz_class jk_fact = factorial(j) * factorial(k);
    for (unsigned long m = 0; m <= j; ++m) {
        for (unsigned long n = 0; n <= k; ++n) {
            const unsigned long drop = (j - m) + (k - n);
            const Rational scalar =
                pochhammer(gamma, m + n + 1) / poch_top *
                Rational(jk_fact * factorial(drop),
                         factorial(m) * factorial(n) * factorial(j - m) * factorial(k - n));
            p.add_term(m, n, inv_sqrt2_pow(drop) * QSqrt2(scalar));
        }
    }
    return OrthoPoly{MonomialIndex{j, k}, std::move(p), QSqrt2(orthopoly_norm_sq(gamma, j, k))};
}

OrthoPoly orthopoly_recursive(const Rational& gamma, unsigned long j, unsigned long k) {
    // Fill the rectangle (0..j, 0..k) in an order where both predecessors of
    // each entry are already present.
    std::vector<std::vector<Poly>> grid(j + 1, std::vector<Poly>(k + 1));
    for (unsigned long m = 0; m <= j; ++m) {
        for (unsigned long n = 0; n <= k; ++n) {
            Poly p = Poly::monomial(m, n);
            if (m + n > 0) {
                Poly tail;
                if (n > 0) tail += scale(QSqrt2(Rational(static_cast<long>(n))), grid[m][n - 1]);
                if (m > 0) tail += scale(QSqrt2(Rational(static_cast<long>(m))), grid[m - 1][n]);
                const QSqrt2 step =
                    inv_sqrt2_pow(1) * QSqrt2(Rational(1) / (gamma + Rational(static_cast<long>(m + n))));
                p += scale(step, tail);
            }
            grid[m][n] = std::move(p);
        }
    }
    return OrthoPoly{MonomialIndex{j, k}, std::move(grid[j][k]),
                     QSqrt2(orthopoly_norm_sq(gamma, j, k))};
}

std::vector<OrthoPoly> gram_schmidt_oracle(const SpaceParams& params, std::size_t count) {
    std::vector<OrthoPoly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const MonomialIndex mi = monomial_at(i);
        const Poly chi = Poly::monomial(mi.m, mi.n);
        Poly p = chi;
        for (const OrthoPoly& prev : out) {
            const QSqrt2 c = weighted_inner_by_expansion(params, chi, prev.poly) / prev.norm_sq;
            p -= scale(c, prev.poly);
        }
        QSqrt2 norm = weighted_inner_by_expansion(params, p, p);
        out.push_back(OrthoPoly{mi, std::move(p), std::move(norm)});
    }
    return out;
}

bool verify_f_squared_recursion(unsigned long j, unsigned long k) {
    const SpaceParams params{Rational(1), Weight::FSquared};
    const auto oracle = gram_schmidt_oracle(params, index_of(j, k) + 1);
    const auto phi = [&oracle](unsigned long a, unsigned long b) -> const Poly& {
        return oracle[index_of(a, b)].poly;
    };
    const Poly& lhs = phi(j, k);
    if (lhs.coefficient_at(j, k) != QSqrt2(1))
        throw IndexMappingError("Gram-Schmidt output at index_of(j,k) is not monic in z1^j z2^k");

    const long jl = static_cast<long>(j);
    const long kl = static_cast<long>(k);
    const Rational s(jl + kl);
    Poly rhs = Poly::monomial(j, k);

    Poly first;
    if (k > 0) first += scale(QSqrt2(Rational(kl)), phi(j, k - 1));
    if (j > 0) first += scale(QSqrt2(Rational(jl)), phi(j - 1, k));
    rhs += scale(QSqrt2::sqrt2() * QSqrt2(Rational(1) / (s + 2)), first);

    Poly second;
    if (k > 1) second += scale(QSqrt2(Rational(kl * (kl - 1), 2)), phi(j, k - 2));
    if (j > 0 && k > 0) second += scale(QSqrt2(Rational(jl * kl)), phi(j - 1, k - 1));
    if (j > 1) second += scale(QSqrt2(Rational(jl * (jl - 1), 2)), phi(j - 2, k));
    rhs -= scale(QSqrt2(Rational(1) / ((s + 1) * (s + 2))), second);

    return lhs == rhs;
}

}  // namespace hgamma
