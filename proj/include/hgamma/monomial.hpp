#pragma once

namespace hgamma {

/// Exponent pair (m, n) of the monomial z1^m z2^n.
struct MonomialIndex {
    unsigned long m = 0;
    unsigned long n = 0;

    unsigned long degree() const { return m + n; }

    friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

/// Linear position of z1^m z2^n in degree-lex order (increasing total degree,
/// z1 before z2 within a degree): (m+n)(m+n+1)/2 + n.
unsigned long index_of(unsigned long m, unsigned long n);

/// Inverse of index_of; round-trips exactly.
MonomialIndex monomial_at(unsigned long j);

/// Strict degree-lex comparison: index_of(p) < index_of(q).
bool precedes(const MonomialIndex& p, const MonomialIndex& q);

}  // namespace hgamma
