#include <numeric>

#include <gtest/gtest.h>

#include "modeq/arith.hpp"

using namespace modeq;

namespace {

// Brute-force divisor sum, independent of the library's sigma1.
Rational sigma_over_k(unsigned k)
{
    unsigned long s = 0;
    for (unsigned d = 1; d <= k; ++d)
        if (k % d == 0) s += d;
    return make_rational(static_cast<long>(s), k);
}

const std::int64_t primes[] = {3, 5, 7, 11, 13};

} // namespace

TEST(Arith, Primality)
{
    EXPECT_TRUE(is_odd_prime(3));
    EXPECT_TRUE(is_odd_prime(197));
    EXPECT_FALSE(is_odd_prime(2));
    EXPECT_FALSE(is_odd_prime(1));
    EXPECT_FALSE(is_odd_prime(91));
    EXPECT_FALSE(is_odd_prime(-7));
    EXPECT_THROW(AlphaContext(9), InvalidInputError);
    EXPECT_THROW(AlphaContext(2), InvalidInputError);
}

TEST(Arith, SigmaOfNonIntegerIsZero)
{
    EXPECT_EQ(sigma1(make_rational(5, 2)), 0);
    EXPECT_EQ(sigma1(Rational(0)), 0);
    EXPECT_EQ(sigma1(Rational(12)), 28);
}

TEST(Arith, SmallAlphaValues)
{
    for (std::int64_t p : {3, 5, 7, 11, 13, 97}) {
        AlphaContext ctx(p);
        EXPECT_EQ(alpha(ctx, 1), 1);
        EXPECT_EQ(alpha(ctx, 2), make_rational(-3, 2));
        EXPECT_EQ(alpha(ctx, 4), make_rational(-3, 4));
        if (p != 3) EXPECT_EQ(alpha(ctx, 3), make_rational(4, 3));
        if (p != 5) EXPECT_EQ(alpha(ctx, 5), make_rational(6, 5));
    }
    AlphaContext five(5);
    EXPECT_EQ(alpha(five, 5), make_rational(11, 5));
    EXPECT_EQ(alpha(five, 10), make_rational(-33, 10));
    EXPECT_EQ(beta(five, 3), make_rational(8, 3));
}

TEST(Arith, AlphaIsSigmaRatioAwayFromTwoAndP)
{
    for (std::int64_t p : primes) {
        AlphaContext ctx(p);
        for (unsigned k = 1; k <= 200; ++k)
            if (std::gcd<std::int64_t>(k, 2 * p) == 1) EXPECT_EQ(alpha(ctx, k), sigma_over_k(k)) << k;
    }
}

TEST(Arith, AlphaIsMultiplicative)
{
    for (std::int64_t p : primes) {
        AlphaContext ctx(p);
        for (unsigned a = 1; a <= 200; ++a)
            for (unsigned b = 1; a * b <= 200; ++b)
                if (std::gcd(a, b) == 1)
                    EXPECT_EQ(alpha(ctx, a * b), alpha(ctx, a) * alpha(ctx, b)) << "p=" << p << " " << a << "*" << b;
    }
}

TEST(Arith, BetaAgainstAlpha)
{
    for (std::int64_t p : primes) {
        AlphaContext ctx(p);
        for (unsigned k = 1; k <= 200; ++k) {
            if (k % 2 == 1)
                EXPECT_EQ(beta(ctx, k), 2 * alpha(ctx, k));
            else
                EXPECT_EQ(beta(ctx, k), 0);
        }
    }
}

TEST(Arith, GammaIsLinear)
{
    AlphaContext ctx(7);
    for (unsigned k = 1; k <= 30; ++k)
        EXPECT_EQ(gamma(ctx, 3, 2, k), 3 * alpha(ctx, k) + 2 * beta(ctx, k));
}

TEST(Arith, PartitionWeight)
{
    AlphaContext ctx(5);
    Partition j;
    j.add(2, 2);
    j.add(3, 1);
    // alpha(2)^2/2! * alpha(3) = (9/4)/2 * 4/3
    EXPECT_EQ(weight_w(ctx, j), make_rational(3, 2));
    EXPECT_EQ(weight_w(ctx, Partition{}), 1);
}
