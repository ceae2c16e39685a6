#include "doctest.h"

#include "hgamma/monomial.hpp"

using namespace hgamma;

TEST_CASE("degree-lex positions of the first monomials") {
    CHECK(index_of(0, 0) == 0);
    CHECK(index_of(1, 0) == 1);
    CHECK(index_of(0, 1) == 2);
    CHECK(index_of(2, 0) == 3);
    CHECK(index_of(1, 1) == 4);
    CHECK(index_of(0, 2) == 5);
    CHECK(index_of(3, 0) == 6);
}

TEST_CASE("monomial_at inverts index_of") {
    CHECK(monomial_at(0) == MonomialIndex{0, 0});
    CHECK(monomial_at(3) == MonomialIndex{2, 0});
    CHECK(monomial_at(7) == MonomialIndex{2, 1});
    for (unsigned long m = 0; m <= 100; ++m) {
        for (unsigned long n = 0; m + n <= 100; ++n) {
            const MonomialIndex back = monomial_at(index_of(m, n));
            REQUIRE(back.m == m);
            REQUIRE(back.n == n);
        }
    }
}

TEST_CASE("precedes is the strict degree-lex order") {
    CHECK(precedes({1, 0}, {0, 1}));
    CHECK(precedes({0, 2}, {3, 0}));
    CHECK_FALSE(precedes({1, 1}, {1, 1}));
    CHECK_FALSE(precedes({0, 1}, {1, 0}));
}

TEST_CASE("within a degree block the z1-exponent strictly decreases") {
    for (unsigned long d = 0; d <= 20; ++d) {
        unsigned long start = index_of(d, 0);
        CHECK(monomial_at(start) == MonomialIndex{d, 0});
        for (unsigned long n = 1; n <= d; ++n) {
            const MonomialIndex prev = monomial_at(start + n - 1);
            const MonomialIndex cur = monomial_at(start + n);
            CHECK(cur.degree() == d);
            CHECK(cur.m + 1 == prev.m);
        }
        CHECK(monomial_at(index_of(0, d)) == MonomialIndex{0, d});
    }
}
