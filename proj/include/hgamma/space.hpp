#pragma once

#include "hgamma/poly.hpp"
#include "hgamma/qsqrt2.hpp"
#include "hgamma/rational.hpp"

namespace hgamma {

/// Multiplier weight: f = 1 - (sqrt(2)/2)(z1 + z2) or its square.
enum class Weight { F, FSquared };

/// Parameters of the weighted space: gamma > 0 and the weight selector.
struct SpaceParams {
    Rational gamma;
    Weight weight = Weight::F;
};

/// Squared norm of the monomial z1^m z2^n: m! n! / (gamma)_{m+n}. The (0,0)
/// value is 1, which the general formula already yields (empty Pochhammer
/// product).
Rational monomial_norm_sq(const Rational& gamma, unsigned long m, unsigned long n);

/// Unweighted inner product: sum over the shared support of
/// monomial_norm_sq * p-coefficient * q-coefficient (coefficients are real,
/// so conjugation is trivial).
QSqrt2 inner(const Rational& gamma, const Poly& p, const Poly& q);

/// The selected weight as a polynomial.
Poly weight_poly(Weight w);

/// Weighted inner product <p w, q w> by explicit polynomial multiplication.
/// This is the brute-force reference path, valid for every weight; it is
/// kept permanently as the test oracle.
QSqrt2 weighted_inner_by_expansion(const SpaceParams& params, const Poly& p, const Poly& q);

/// Weighted inner product <p w, q w>. For weight f this decomposes over
/// monomial pairs through monomial_weighted_inner; for f^2 it falls back to
/// explicit multiplication.
QSqrt2 weighted_inner(const SpaceParams& params, const Poly& p, const Poly& q);

/// Closed form of <z1^j z2^k, z1^m z2^n> weighted by 1 - a(z1 + z2) for a
/// real parameter a (a = sqrt(2)/2 for the weight f). Seven cases keyed by
/// the offset (m - j, n - k); everything else is exactly zero.
QSqrt2 monomial_weighted_inner(const Rational& gamma, const QSqrt2& a, unsigned long j,
                               unsigned long k, unsigned long m, unsigned long n);

}  // namespace hgamma
