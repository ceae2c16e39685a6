#pragma once

#include <cstddef>
#include <vector>

#include "hgamma/monomial.hpp"
#include "hgamma/poly.hpp"
#include "hgamma/space.hpp"

namespace hgamma {

/// Orthogonal polynomial for the weighted inner product, labeled by the
/// monomial z1^j z2^k it introduces (in which it is monic), with its exact
/// squared norm.
struct OrthoPoly {
    MonomialIndex jk;
    Poly poly;
    QSqrt2 norm_sq;
};

/// Squared norm of the weight-f orthogonal polynomial at (j,k):
/// ((gamma+j+k+1)/(gamma+j+k)) * j! k! / (gamma)_{j+k}.
Rational orthopoly_norm_sq(const Rational& gamma, unsigned long j, unsigned long k);

/// Weight-f orthogonal polynomial from the closed-form coefficients
///   (sqrt(2)/2)^{j+k-m-n} * (gamma)_{m+n+1}/(gamma)_{j+k+1}
///     * (j!k!/(m!n!)) * (j+k-m-n)!/((j-m)!(k-n)!)
/// over the rectangle 0 <= m <= j, 0 <= n <= k.
OrthoPoly orthopoly_closed_form(const Rational& gamma, unsigned long j, unsigned long k);

/// The same polynomial built by the two-term recursion
///   phi_{j,k} = z1^j z2^k + (sqrt(2)/2) (1/(gamma+j+k)) (k phi_{j,k-1} + j phi_{j-1,k}),
/// negative-index terms omitted (their multipliers vanish); the norm is
/// attached from orthopoly_norm_sq.
OrthoPoly orthopoly_recursive(const Rational& gamma, unsigned long j, unsigned long k);

/// Classical Gram–Schmidt on the first `count` monomials under the weighted
/// inner product, computed entirely through the explicit-multiplication
/// reference path. Norms come from inner products, never from the closed
/// formula, so the output is an independent oracle. Valid for both weights.
std::vector<OrthoPoly> gram_schmidt_oracle(const SpaceParams& params, std::size_t count);

/// Checks that the Gram–Schmidt polynomials for weight f^2 at gamma = 1
/// satisfy
///   phi_{j,k} = z1^j z2^k + (sqrt(2)/(j+k+2)) (k phi_{j,k-1} + j phi_{j-1,k})
///     - (1/((j+k+1)(j+k+2))) ((k(k-1)/2) phi_{j,k-2} + j k phi_{j-1,k-1}
///                             + (j(j-1)/2) phi_{j-2,k}),
/// negative-index terms omitted. Throws IndexMappingError if the oracle
/// polynomial at position index_of(j,k) is not monic in z1^j z2^k.
bool verify_f_squared_recursion(unsigned long j, unsigned long k);

}  // namespace hgamma
