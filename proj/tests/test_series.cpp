#include <doctest.h>

#include <random>

#include "chh/checks.hpp"
#include "chh/series.hpp"

using namespace chh;

TEST_CASE("symmetric and alternating square series on pinned inputs") {
    const int D = 6;
    CHECK(sym2Series(Series::one(D)) == Series::one(D));
    CHECK(alt2Series(Series::one(D)) == Series::zero(D));

    CHECK(sym2Series(Series::monomial(1, D)) == Series::zero(D));
    CHECK(alt2Series(Series::monomial(1, D)) == Series::monomial(2, D));

    const Series onePlusT = Series::polynomial({1, 1}, D);
    CHECK(sym2Series(onePlusT) == onePlusT);
    CHECK(alt2Series(onePlusT) == Series::polynomial({0, 1, 1}, D));
}

TEST_CASE("alternating-square comodule series on pinned inputs") {
    const int D = 6;
    CHECK(alt2ComoduleSeries(Series::one(D)) == Series::monomial(2, D));
    CHECK(alt2ComoduleSeries(Series::zero(D)) == Series::zero(D));
    // Expanding ((1+t^2)(1+t)^2 - (1-t^2)^2)/2 exactly gives t + 2t^2 + t^3;
    // consistent with alt2Comodule(pW) * psB2 == alt2(pW * psB1) below.
    CHECK(alt2ComoduleSeries(Series::polynomial({1, 1}, D)) ==
          Series::polynomial({0, 1, 2, 1}, D));
}

TEST_CASE("BU homology series") {
    const Series b1 = psB1(6);
    for (int d = 0; d <= 6; ++d) CHECK(b1.coeff(d) == Rational(d % 2 == 0 ? 1 : 0));
    const Series b2 = psB2(6);
    CHECK(b2.coeff(0) == Rational(1));
    CHECK(b2.coeff(4) == Rational(2));
    CHECK(b2 == Series::polynomial({1, 0, 1, 0, 2, 0, 2}, 6));
}

TEST_CASE("closed-form U(2) polynomials") {
    for (const auto& [s, r] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const auto& want = expectedPU2Coeffs(s, r);
        const int deg = static_cast<int>(want.size()) - 1;
        CHECK(pU2(s, r, deg) == Series::polynomial(want, deg));
        CHECK(pU2Degree(s, r) == deg);
    }
    CHECK(pU2(0, 0, 4) == Series::one(4));
    const int D = 10;
    CHECK(pU2(2, 0, D) ==
          mul(onePlusTPow(2, D), pow(Series::polynomial({1, 0, 0, 1}, D), 2)));
    CHECK_THROWS_AS(pU2(2, 1, 8), TruncationError);
}

TEST_CASE("character variety polynomials") {
    CHECK(pRepF2(0, 2) == Series::polynomial({1, 2, 1}, 2));
    const int D = pRepF2Degree(1);
    CHECK(D == 5);
    const Series want = mul(pow(Series::polynomial({1, 1}, D), 3), Series::polynomial({1, 0, 2}, D));
    CHECK(pRepF2(1, D) == want);
    for (int r = 0; r <= 6; ++r) CHECK(pRepF2(r, pRepF2Degree(r)).allCoeffsNonNegativeIntegers());
}

TEST_CASE("comodule assembly identity matches the closed form") {
    CHECK(formulaCrossCheckU2(2, 1, 10));
    CHECK(formulaCrossCheckU2(3, 2, 10));
    CHECK(formulaCrossCheckU2(0, 0, 5));
}

TEST_CASE("splitting identity on random series") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Series p(7);
        for (int d = 0; d <= 7; ++d) p.setCoeff(d, Rational(coeff(rng)));
        CHECK(add(sym2Series(p), alt2Series(p)) == mul(p, p));
    }
}

TEST_CASE("series arithmetic guard rails") {
    CHECK_THROWS(divByUnit(Series::one(3), Series::polynomial({2, 1}, 3)));
    CHECK_THROWS(add(Series::one(3), Series::one(4)));
    const Series g = psB1(9);
    CHECK(mul(g, Series::polynomial({1, 0, -1}, 9)) == Series::one(9));
}
