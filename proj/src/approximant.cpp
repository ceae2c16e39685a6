#include "hgamma/approximant.hpp"

#include <cmath>

#include "hgamma/errors.hpp"
#include "hgamma/orthopoly.hpp"
#include "hgamma/space.hpp"

namespace hgamma {

Poly approximant_term(const Rational& gamma, unsigned long j, unsigned long k) {
    Poly p;
    const Rational poch_bottom = pochhammer(gamma, j + k + 2);
    const mpz_class sum_fact = factorial(j + k);
    for (unsigned long m = 0; m <= j; ++m) {
        for (unsigned long n = 0; n <= k; ++n) {
            const unsigned long drop = (j - m) + (k - n);
            const Rational scalar =
                gamma * pochhammer(gamma, m + n + 1) / poch_bottom *
                Rational(sum_fact * factorial(drop),
                         factorial(m) * factorial(n) * factorial(j - m) * factorial(k - n));
            p.add_term(m, n, inv_sqrt2_pow(j + k + drop) * QSqrt2(scalar));
        }
    }
    return p;
}

bool verify_term_projection(const Rational& gamma, unsigned long j, unsigned long k) {
    const OrthoPoly phi = orthopoly_closed_form(gamma, j, k);
    const QSqrt2 scalar = phi.poly.coefficient_at(0, 0) / phi.norm_sq;
    const QSqrt2 stated =
        inv_sqrt2_pow(j + k) *
        QSqrt2(Rational(factorial(j + k), factorial(j) * factorial(k)) * gamma /
               (gamma + Rational(static_cast<long>(j + k)) + 1));
    if (scalar != stated) return false;
    return approximant_term(gamma, j, k) == scale(scalar, phi.poly);
}

Approximant optimal_approximant(const Rational& gamma, unsigned long n) {
    Poly p;
    for (unsigned long idx = 0; idx <= n; ++idx) {
        const MonomialIndex mi = monomial_at(idx);
        p += approximant_term(gamma, mi.m, mi.n);
    }
    return Approximant{n, monomial_at(n), std::move(p)};
}

namespace {

/// Exact Gaussian elimination with partial (first-nonzero) pivoting on an
/// augmented system over Q(sqrt(2)).
std::vector<QSqrt2> solve_exact(std::vector<std::vector<QSqrt2>> m) {
    const std::size_t dim = m.size();
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && m[pivot][col].is_zero()) ++pivot;
        if (pivot == dim) throw SingularSystemError("normal equations are singular");
        std::swap(m[col], m[pivot]);
        const QSqrt2 inv = m[col][col].inverse();
        for (std::size_t c = col; c <= dim; ++c) m[col][c] *= inv;
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const QSqrt2 factor = m[row][col];
            for (std::size_t c = col; c <= dim; ++c) m[row][c] -= factor * m[col][c];
        }
    }
    std::vector<QSqrt2> x(dim);
    for (std::size_t row = 0; row < dim; ++row) x[row] = m[row][dim];
    return x;
}

}  // namespace

Approximant approximant_oracle(const Rational& gamma, unsigned long n) {
    const SpaceParams params{gamma, Weight::F};
    const Poly f = weight_f();
    const Poly one = Poly::constant(QSqrt2(1));
    const std::size_t dim = n + 1;

    std::vector<Poly> chi;
    chi.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const MonomialIndex mi = monomial_at(i);
        chi.push_back(Poly::monomial(mi.m, mi.n));
    }

    std::vector<std::vector<QSqrt2>> system(dim, std::vector<QSqrt2>(dim + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t l = 0; l <= i; ++l) {
            QSqrt2 g = weighted_inner(params, chi[i], chi[l]);
            system[l][i] = g;
            system[i][l] = std::move(g);
        }
        system[i][dim] = inner(gamma, one, f * chi[i]);
    }

    const std::vector<QSqrt2> c = solve_exact(std::move(system));
    Poly p;
    for (std::size_t i = 0; i < dim; ++i) {
        const MonomialIndex mi = monomial_at(i);
        p.add_term(mi.m, mi.n, c[i]);
    }
    return Approximant{n, monomial_at(n), std::move(p)};
}

QSqrt2 optimal_distance(const Rational& gamma, unsigned long n) {
    const Poly residual =
        optimal_approximant(gamma, n).poly * weight_f() - Poly::constant(QSqrt2(1));
    return inner(gamma, residual, residual);
}

DistanceSeries optimal_distance_series(const Rational& gamma, unsigned long n_max) {
    DistanceSeries series;
    series.gamma = gamma;
    series.entries.reserve(n_max + 1);

    const Poly f = weight_f();
    const Poly one = Poly::constant(QSqrt2(1));
    const Rational gamma_sq = gamma * gamma;
    Rational partial_sum = 0;
    Poly weighted_approx;  // running p_n* f

    for (unsigned long n = 0; n <= n_max; ++n) {
        const MonomialIndex mi = monomial_at(n);
        const unsigned long s = mi.degree();
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, s);
        partial_sum += Rational(factorial(s) * binomial(s, mi.m), two_pow) /
                       pochhammer(gamma, s + 2);
        const Rational nu_sq = Rational(1) - gamma_sq * partial_sum;

        weighted_approx += approximant_term(gamma, mi.m, mi.n) * f;
        const Poly residual = weighted_approx - one;
        const QSqrt2 direct = inner(gamma, residual, residual);
        if (direct != QSqrt2(nu_sq)) {
            throw ConventionMismatchError(
                "distance series disagrees with the direct norm at n=" + std::to_string(n) +
                ": series " + nu_sq.str() + " vs direct (" + direct.a().str() + ") + (" +
                direct.b().str() + ")*sqrt(2)");
        }
        series.entries.push_back(DistanceEntry{n, s, QSqrt2(nu_sq), nu_sq.to_double()});
    }
    return series;
}

double decay_slope(const DistanceSeries& series, unsigned long d_min, unsigned long d_max) {
    if (d_min < 2) throw InsufficientDataError("fit range must start at total degree 2 or higher");
    if (series.entries.empty() || series.entries.back().n < index_of(0, d_max))
        throw InsufficientDataError("series is not complete through total degree " +
                                    std::to_string(d_max));
    std::vector<double> xs, ys;
    for (const DistanceEntry& e : series.entries) {
        if (e.degree < d_min || e.degree > d_max) continue;
        if (e.n != index_of(0, e.degree)) continue;  // only full-degree block ends
        xs.push_back(std::log(static_cast<double>(e.degree)));
        ys.push_back(std::log(e.nu_sq_float));
    }
    if (xs.size() < 3)
        throw InsufficientDataError("decay fit needs at least 3 complete degrees in range");

    double mean_x = 0, mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(xs.size());
    mean_y /= static_cast<double>(xs.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mean_x) * (ys[i] - mean_y);
        den += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    return num / den;
}

}  // namespace hgamma
