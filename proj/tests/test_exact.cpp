#include "fvset/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fvset;

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(16), 4);
    EXPECT_EQ(isqrt(15), 3);
    EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Isqrt, BracketsTheRootUpToTwoHundredThousand) {
    long r = 0;
    for (long n = 0; n <= 200000; ++n) {
        while ((r + 1) * (r + 1) <= n) ++r;
        ASSERT_EQ(isqrt(n), r) << n;
    }
}

TEST(Isqrt, LargeValues) {
    Integer big = pow(Integer(10), 60) + 12345;
    Integer r = isqrt(big);
    EXPECT_LE(r * r, big);
    EXPECT_GT((r + 1) * (r + 1), big);
    EXPECT_TRUE(is_perfect_square(r * r));
    EXPECT_FALSE(is_perfect_square(r * r + 1));
}

TEST(Binomial, Examples) {
    EXPECT_EQ(binomial(5, 3), 10);
    EXPECT_EQ(binomial(4, 5), 0);
    EXPECT_EQ(binomial(19, 3), 969);
    EXPECT_EQ(binomial(7, 0), 1);
}

TEST(Binomial, PascalRule) {
    for (long n = 1; n <= 100; ++n)
        for (long k = 1; k <= n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
}

TEST(CeilHalfSqrt, Examples) {
    EXPECT_EQ(ceil_half_sqrt(0), 2);
    EXPECT_EQ(ceil_half_sqrt(10), 4);
    EXPECT_EQ(ceil_half_sqrt(7), 4);
}

TEST(CeilHalfSqrt, LeastOddBoundUpToOneHundredThousand) {
    long m = 1;
    for (long x = 0; x <= 100000; ++x) {
        while ((2 * m - 1) * (2 * m - 1) < 4 * x + 9) ++m;
        ASSERT_EQ(ceil_half_sqrt(x), m) << x;
    }
}

TEST(Surd, Normalization) {
    Surd s = Surd::sqrt(12);
    EXPECT_EQ(s.radicand(), 3);
    EXPECT_EQ(s.radical_coefficient(), 2);
    EXPECT_TRUE(Surd::sqrt(Rational(9, 4)).is_rational());
    EXPECT_EQ(Surd::sqrt(Rational(9, 4)), Surd(Rational(3, 2)));
    EXPECT_EQ(Surd::sqrt(8), Surd(0, 2, 2));
    Surd t = Surd::sqrt(Rational(3, 8));  // sqrt(6)/4
    EXPECT_EQ(t.radicand(), 6);
    EXPECT_EQ(t.radical_coefficient(), Rational(1, 4));
}

TEST(Surd, CompareExamples) {
    EXPECT_EQ(surd_cmp(Surd::sqrt(2), Surd(Rational(3, 2))), std::strong_ordering::less);
    EXPECT_EQ(surd_cmp(Surd(Rational(1, 2), 1, 9), Surd(Rational(7, 2))), std::strong_ordering::equal);
    EXPECT_EQ(surd_cmp(Surd(3), Surd::sqrt(Rational(37, 4))), std::strong_ordering::less);
    EXPECT_LT(Surd::sqrt(2) + Surd::sqrt(8), Surd::sqrt(19));  // 3 sqrt 2 < sqrt 19
    EXPECT_GT(Surd::sqrt(2) + Surd::sqrt(8), Surd::sqrt(17));
}

TEST(Surd, DistinctRadicands) {
    EXPECT_EQ(surd_cmp(Surd::sqrt(2), Surd(3, -1, 3)), std::strong_ordering::greater);   // 1.414 vs 1.268
    EXPECT_EQ(surd_cmp(Surd(1, 1, 2), Surd::sqrt(6)), std::strong_ordering::less);       // 2.414 vs 2.449
    EXPECT_EQ(surd_cmp(Surd(-1, 1, 2), Surd(2, -1, 3)), std::strong_ordering::greater);  // 0.414 vs 0.268
    EXPECT_THROW(Surd::sqrt(10) - Surd::sqrt(3), std::domain_error);
}

TEST(Surd, MatchesLongDoubleOnRandomPairs) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 30), rad(0, 200);
    int checked = 0;
    for (int it = 0; it < 10000; ++it) {
        Rational a1(num(rng), den(rng)), b1(num(rng), den(rng)), a2(num(rng), den(rng)), b2(num(rng), den(rng));
        long c1 = rad(rng), c2 = rad(rng);
        Surd s(a1, b1, c1), t(a2, b2, c2);
        long double vs = a1.convert_to<long double>() + b1.convert_to<long double>() * std::sqrt((long double)c1);
        long double vt = a2.convert_to<long double>() + b2.convert_to<long double>() * std::sqrt((long double)c2);
        if (std::fabs(vs - vt) < 1e-9L) continue;
        ++checked;
        ASSERT_EQ(surd_cmp(s, t), vs < vt ? std::strong_ordering::less : std::strong_ordering::greater)
            << s << " vs " << t;
    }
    EXPECT_GT(checked, 9900);
}

TEST(Surd, FloorAndCeil) {
    EXPECT_EQ(Surd::sqrt(4).floor(), 2);
    EXPECT_EQ(Surd::sqrt(2).floor(), 1);
    EXPECT_EQ(Surd::sqrt(2).ceil(), 2);
    EXPECT_EQ((-Surd::sqrt(2)).floor(), -2);
    EXPECT_EQ(Surd(Rational(7, 2)).floor(), 3);
    EXPECT_EQ(Surd(Rational(-7, 2)).ceil(), -3);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 12), rad(2, 5000);
    for (int it = 0; it < 5000; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        long c = rad(rng);
        Surd s(a, b, c);
        Integer f = s.floor();
        ASSERT_LE(Surd(f), s);
        ASSERT_GT(Surd(Integer(f + 1)), s);
        ASSERT_EQ(s.ceil(), s.is_rational() && denominator(s.rational_part()) == 1 ? f : Integer(f + 1));
    }
}

TEST(Surd, Arithmetic) {
    Surd s(1, 2, 3);
    Surd t(Rational(-1), 1, 3);
    EXPECT_EQ(s + t, Surd(0, 3, 3));
    EXPECT_EQ(s * t, Surd(Rational(5), -1, 3));
    EXPECT_EQ(s - s, Surd(0));
    EXPECT_EQ(abs(-Surd::sqrt(5)), Surd::sqrt(5));
}
