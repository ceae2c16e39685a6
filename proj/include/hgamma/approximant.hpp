#pragma once

#include <optional>
#include <vector>

#include "hgamma/monomial.hpp"
#include "hgamma/poly.hpp"
#include "hgamma/rational.hpp"

namespace hgamma {

/// Optimal approximant of order n: the polynomial in span{chi_0, ..., chi_n}
/// closest to 1/f in the weighted norm. The bidegree is the exponent pair of
/// the last admitted monomial, monomial_at(n).
struct Approximant {
    unsigned long n = 0;
    MonomialIndex bidegree;
    Poly poly;
};

/// One exact squared optimal distance nu^2_n with its float projection.
struct DistanceEntry {
    unsigned long n = 0;
    unsigned long degree = 0;
    QSqrt2 nu_sq;
    double nu_sq_float = 0.0;
};

/// The distances nu^2_0 ... nu^2_{n_max} for one gamma, plus the fitted
/// decay slope when requested.
struct DistanceSeries {
    Rational gamma;
    std::vector<DistanceEntry> entries;
    std::optional<double> fitted_slope;
};

/// Building block of the approximant sum: the polynomial with coefficients
///   (sqrt(2)/2)^{2(j+k)-m-n} * gamma * ((j+k)!/(m!n!))
///     * (gamma)_{m+n+1}/(gamma)_{j+k+2} * (j+k-m-n)!/((j-m)!(k-n)!)
/// over 0 <= m <= j, 0 <= n <= k.
Poly approximant_term(const Rational& gamma, unsigned long j, unsigned long k);

/// Checks that approximant_term(gamma, j, k) equals the projection scalar
/// phi^(0,0)/||phi||^2 times the orthogonal polynomial at (j,k), and that the
/// scalar itself equals (sqrt(2)/2)^{j+k} ((j+k)!/(j!k!)) gamma/(gamma+j+k+1),
/// everything from the closed forms.
bool verify_term_projection(const Rational& gamma, unsigned long j, unsigned long k);

/// p_n* assembled as the sum of approximant_term over index_of(j,k) <= n.
Approximant optimal_approximant(const Rational& gamma, unsigned long n);

/// Independent reference path: solves the (n+1)x(n+1) normal equations
/// G c = b exactly, where G_{il} = weighted_inner(chi_i, chi_l) for weight f
/// and b_i = inner(1, f chi_i), by Gaussian elimination over Q(sqrt(2)).
/// Throws SingularSystemError if elimination finds no pivot (must never
/// happen: the Gram matrix of the independent family {f chi_i} is positive
/// definite).
Approximant approximant_oracle(const Rational& gamma, unsigned long n);

/// Exact squared distance ||p_n* f - 1||^2 by direct expansion; this path is
/// the authority the series form is validated against.
QSqrt2 optimal_distance(const Rational& gamma, unsigned long n);

/// The distances via the series
///   nu^2_n = 1 - gamma^2 sum 2^{-(j+k)} ((j+k)!/(gamma)_{j+k+2}) C(j+k, j)
/// summed over index_of(j,k) <= n. Every entry is checked exactly against
/// optimal_distance; a mismatch throws ConventionMismatchError naming the
/// first offending order.
DistanceSeries optimal_distance_series(const Rational& gamma, unsigned long n_max);

/// Least-squares slope of log nu^2 against log degree, sampled at the last
/// order of each total degree d in [d_min, d_max]. Throws
/// InsufficientDataError when the range covers fewer than 3 degrees or the
/// series does not reach d_max.
double decay_slope(const DistanceSeries& series, unsigned long d_min, unsigned long d_max);

}  // namespace hgamma
