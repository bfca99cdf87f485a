#include <gtest/gtest.h>

#include <random>

#include "p2omega/asymptotics.hpp"

using namespace p2omega;

namespace {

HalfLaurent random_poly(std::mt19937& rng, bool gaussian = false) {
    std::uniform_int_distribution<int> len(0, 6), exp(-12, 12), coef(-9, 9), den(1, 4);
    std::vector<HalfLaurent::Term> t;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        mpq_class re(coef(rng), den(rng));
        re.canonicalize();
        mpq_class im = gaussian ? mpq_class(coef(rng)) : mpq_class(0);
        t.emplace_back(exp(rng), GaussRat(re, im));
    }
    return HalfLaurent::from_terms(std::move(t));
}

}  // namespace

TEST(GaussRat, FieldOperations) {
    GaussRat a(mpq_class(1, 2), mpq_class(3)), b(mpq_class(-2), mpq_class(1, 3));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a - a, GaussRat());
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
    EXPECT_TRUE(GaussRat(7).is_integer());
    EXPECT_FALSE(GaussRat(mpq_class(1, 2)).is_integer());
    EXPECT_THROW(a / GaussRat(), std::domain_error);
}

TEST(HalfLaurent, RingAxiomsOnRandomInputs) {
    std::mt19937 rng(20261017);
    for (int trial = 0; trial < 200; ++trial) {
        HalfLaurent a = random_poly(rng, trial % 2), b = random_poly(rng), c = random_poly(rng, trial % 3 == 0);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, HalfLaurent());
        ASSERT_EQ(a * HalfLaurent(1), a);
    }
}

TEST(HalfLaurent, ExactDivRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        HalfLaurent a = random_poly(rng, trial % 2), b = random_poly(rng);
        if (b.is_zero()) continue;
        ASSERT_EQ(exact_div(a * b, b), a);
    }
}

TEST(HalfLaurent, ExactDivRejectsRemainder) {
    EXPECT_THROW(exact_div(HalfLaurent::y_pow(2) + HalfLaurent(1), u_factor()), NotDivisible);
}

TEST(HalfLaurent, QuantumIntegerIsRatioOfHalfDiffs) {
    for (int m = 1; m <= 30; ++m) {
        EXPECT_EQ(quantum_integer(m) * half_diff(1), half_diff(m));
        EXPECT_TRUE(quantum_integer(m).is_palindromic());
        EXPECT_EQ(quantum_integer(m).eval_at_one(), GaussRat(m));
    }
}

TEST(HalfLaurent, SinFactorTimesIIsHalfDiff) {
    for (int m = 1; m <= 9; ++m) EXPECT_EQ(sin_factor(m) * GaussRat::i(), half_diff(m));
}

TEST(HalfLaurent, SubstitutePowerIsRingMap) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        HalfLaurent a = random_poly(rng), b = random_poly(rng);
        ASSERT_EQ((a * b).substitute_power(3), a.substitute_power(3) * b.substitute_power(3));
    }
}

TEST(RatFun, ArithmeticAgreesWithCrossMultiplication) {
    RatFun a(HalfLaurent(1), half_diff(1));
    RatFun b(HalfLaurent(1), half_diff(3));
    RatFun s = a + b;
    EXPECT_EQ(s * RatFun(half_diff(1) * half_diff(3)), RatFun(half_diff(3) + half_diff(1)));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_FALSE(a.is_laurent());
    EXPECT_TRUE(RatFun(half_diff(3), half_diff(1)).is_laurent());
    EXPECT_EQ(RatFun(half_diff(3), half_diff(1)).to_laurent(), quantum_integer(3));
    EXPECT_THROW(RatFun(HalfLaurent(1), HalfLaurent()), std::domain_error);
}

TEST(Series, InverseOfRandomUnit) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> c{1 + std::abs(coef(rng))};
        for (int i = 0; i < 8; ++i) c.push_back(coef(rng));
        TwoVarSeries s = TwoVarSeries::from_poly(c, 25);
        ASSERT_EQ(s * s.inverse(), TwoVarSeries::one(1, 25));
    }
}

TEST(Series, GeometricInverse) {
    TwoVarSeries g = poly_series({1, -1}, 15).inverse();
    for (int i = 0; i <= 15; ++i) EXPECT_EQ(g.coeff(i), 1);
}

TEST(Series, TwoVariableDiagonal) {
    // (q + t)^2 at q = t = s is 4 s^2
    TwoVarSeries x = TwoVarSeries::monomial(2, 6, 1, 0) + TwoVarSeries::monomial(2, 6, 0, 1);
    TwoVarSeries d = (x * x).diagonal();
    EXPECT_EQ(d.coeff(2), 4);
    EXPECT_EQ(d.coeff(1), 0);
}
