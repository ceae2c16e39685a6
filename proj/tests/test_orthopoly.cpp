#include "doctest.h"

#include "hgamma/orthopoly.hpp"

#include <vector>

using namespace hgamma;

namespace {

QSqrt2 q(long an, long ad, long bn, long bd) {
    return QSqrt2(Rational(an, ad), Rational(bn, bd));
}

const std::vector<Rational> kGammas = {
    Rational(1), Rational(2), Rational(3), Rational(5, 2), Rational(1, 3)};

} // namespace

TEST_CASE("squared norms from the closed formula") {
    for (const Rational& g : kGammas) {
        CHECK(orthopoly_norm_sq(g, 0, 0) == (g + Rational(1)) / g);
    }
    // gamma = 1, (1,0): ((1+2)/(1+1)) * 1 / (1)_1 = 3/2.
    CHECK(orthopoly_norm_sq(Rational(1), 1, 0) == Rational(3, 2));
    // gamma = 2, (1,1): ((2+3)/(2+2)) * 1 / (2)_2 = 5/24.
    CHECK(orthopoly_norm_sq(Rational(2), 1, 1) == Rational(5, 24));
}

TEST_CASE("closed-form polynomials at small indices") {
    OrthoPoly p00 = orthopoly_closed_form(Rational(2), 0, 0);
    CHECK(p00.poly == Poly::constant(QSqrt2(1)));
    CHECK(p00.norm_sq == QSqrt2(Rational(3, 2)));
    CHECK(p00.jk == MonomialIndex{0, 0});

    // gamma = 1: phi_{1,0} = z1 + sqrt(2)/4.
    OrthoPoly p10 = orthopoly_closed_form(Rational(1), 1, 0);
    CHECK(p10.poly.term_count() == 2);
    CHECK(p10.poly.coefficient_at(1, 0) == QSqrt2(1));
    CHECK(p10.poly.coefficient_at(0, 0) == q(0, 1, 1, 4));
    CHECK(p10.norm_sq == QSqrt2(Rational(3, 2)));

    // gamma = 2: the constant coefficient of phi_{1,1} is
    // (1/2) * (2)_1/(2)_3 * 1 * 2 = 1/12, purely rational.
    OrthoPoly p11 = orthopoly_closed_form(Rational(2), 1, 1);
    CHECK(p11.poly.coefficient_at(1, 1) == QSqrt2(1));
    CHECK(p11.poly.coefficient_at(0, 0) == q(1, 12, 0, 1));
    CHECK(p11.poly.term_count() == 4);
}

TEST_CASE("coefficient support is the full exponent rectangle") {
    OrthoPoly p = orthopoly_closed_form(Rational(5, 2), 3, 2);
    CHECK(p.poly.term_count() == 4 * 3);
    for (unsigned long m = 0; m <= 3; ++m)
        for (unsigned long n = 0; n <= 2; ++n)
            CHECK_FALSE(p.poly.coefficient_at(m, n).is_zero());
    CHECK(p.poly.coefficient_at(4, 0).is_zero());
    CHECK(p.poly.coefficient_at(0, 3).is_zero());
}

TEST_CASE("coefficients are symmetric under swapping the two variables") {
    for (unsigned long j = 0; j <= 4; ++j) {
        for (unsigned long k = 0; k <= 4; ++k) {
            OrthoPoly a = orthopoly_closed_form(Rational(5, 2), j, k);
            OrthoPoly b = orthopoly_closed_form(Rational(5, 2), k, j);
            for (unsigned long m = 0; m <= j; ++m)
                for (unsigned long n = 0; n <= k; ++n)
                    CHECK(a.poly.coefficient_at(m, n) == b.poly.coefficient_at(n, m));
        }
    }
}

TEST_CASE("recursion reproduces the closed form") {
    CHECK(orthopoly_recursive(Rational(2), 0, 0).poly == Poly::constant(QSqrt2(1)));

    // gamma = 2: phi_{1,0} = z1 + (sqrt(2)/2)(1/3) = z1 + sqrt(2)/6.
    OrthoPoly p10 = orthopoly_recursive(Rational(2), 1, 0);
    CHECK(p10.poly.coefficient_at(0, 0) == q(0, 1, 1, 6));

    for (const Rational& g : {Rational(1), Rational(5, 2)}) {
        for (unsigned long j = 0; j <= 4; ++j)
            for (unsigned long k = 0; k <= 4; ++k) {
                OrthoPoly rec = orthopoly_recursive(g, j, k);
                OrthoPoly cf = orthopoly_closed_form(g, j, k);
                REQUIRE(rec.poly == cf.poly);
                REQUIRE(rec.norm_sq == cf.norm_sq);
            }
    }
}

TEST_CASE("Gram-Schmidt oracle matches the closed form for weight f") {
    SpaceParams sp{Rational(2), Weight::F};

    std::vector<OrthoPoly> basis = gram_schmidt_oracle(sp, 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].poly == Poly::constant(QSqrt2(1)));
    CHECK(basis[0].norm_sq == QSqrt2(Rational(3, 2)));

    basis = gram_schmidt_oracle(sp, 15);
    for (const OrthoPoly& b : basis) {
        OrthoPoly cf = orthopoly_closed_form(sp.gamma, b.jk.m, b.jk.n);
        REQUIRE(b.poly == cf.poly);
        REQUIRE(b.norm_sq == cf.norm_sq);
    }
}

TEST_CASE("Gram-Schmidt output is pairwise orthogonal") {
    SpaceParams sp{Rational(5, 2), Weight::F};
    std::vector<OrthoPoly> basis = gram_schmidt_oracle(sp, 10);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(weighted_inner_by_expansion(sp, basis[i].poly, basis[i].poly) == basis[i].norm_sq);
        for (std::size_t l = 0; l < i; ++l) {
            REQUIRE(weighted_inner_by_expansion(sp, basis[i].poly, basis[l].poly).is_zero());
        }
    }
}

TEST_CASE("monomials below the diagonal drop out of the projection") {
    // <z1^j z2^k, phi_{j+1,k-1}> = 0: the rectangle of phi_{j+1,k-1} meets
    // the monomial only through mutually cancelling interaction terms.
    for (const Rational& g : {Rational(2), Rational(1, 3)}) {
        SpaceParams sp{g, Weight::F};
        for (unsigned long j = 0; j + 1 <= 6; ++j)
            for (unsigned long k = 1; (j + 1) + (k - 1) <= 6; ++k) {
                OrthoPoly phi = orthopoly_closed_form(g, j + 1, k - 1);
                REQUIRE(weighted_inner_by_expansion(sp, Poly::monomial(j, k), phi.poly).is_zero());
            }
    }
}

TEST_CASE("squared-weight Gram-Schmidt at gamma = 1") {
    SpaceParams sp{Rational(1), Weight::FSquared};
    std::vector<OrthoPoly> basis = gram_schmidt_oracle(sp, 6);

    // phi_{1,0} = z1 + sqrt(2)/3 under f^2.
    REQUIRE(basis.size() == 6);
    CHECK(basis[1].jk == MonomialIndex{1, 0});
    CHECK(basis[1].poly.coefficient_at(1, 0) == QSqrt2(1));
    CHECK(basis[1].poly.coefficient_at(0, 0) == q(0, 1, 1, 3));

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t l = 0; l < i; ++l)
            REQUIRE(weighted_inner_by_expansion(sp, basis[i].poly, basis[l].poly).is_zero());
}

TEST_CASE("squared-weight recursion holds at small indices") {
    CHECK(verify_f_squared_recursion(0, 0));
    CHECK(verify_f_squared_recursion(1, 0));
    CHECK(verify_f_squared_recursion(2, 1));
    CHECK(verify_f_squared_recursion(0, 3));
}
