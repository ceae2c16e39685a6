#include "hgamma/monomial.hpp"

#include <cmath>

namespace hgamma {

unsigned long index_of(unsigned long m, unsigned long n) {
    const unsigned long d = m + n;
    return d * (d + 1) / 2 + n;
}

MonomialIndex monomial_at(unsigned long j) {
    // Total degree is the largest d with d(d+1)/2 <= j; start from the
    // floating triangular root and correct for rounding.
    auto d = static_cast<unsigned long>((std::sqrt(8.0 * static_cast<double>(j) + 1.0) - 1.0) / 2.0);
    while (d > 0 && d * (d + 1) / 2 > j) --d;
    while ((d + 1) * (d + 2) / 2 <= j) ++d;
    const unsigned long n = j - d * (d + 1) / 2;
    return MonomialIndex{d - n, n};
}

bool precedes(const MonomialIndex& p, const MonomialIndex& q) {
    return index_of(p.m, p.n) < index_of(q.m, q.n);
}

}  // namespace hgamma
