#include <random>

#include <gtest/gtest.h>

#include "modeq/qseries.hpp"
#include "oracles.hpp"

using namespace modeq;

namespace {

TruncatedSeries random_unit_series(std::mt19937_64& rng, unsigned order)
{
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (unsigned k = 1; k <= order; ++k) c[k] = oracle::random_rational(rng, 4, 3);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return TruncatedSeries(std::move(v));
}

} // namespace

TEST(QSeries, BasicArithmetic)
{
    EXPECT_EQ(inverse(series({1, -1, 0, 0})), series({1, 1, 1, 1}));
    EXPECT_EQ(series({1, 1, 0}) * series({1, 1, 0}), series({1, 2, 1}));
    const auto e = exp(series({0, 1, 0, 0}));
    EXPECT_EQ(e[3], make_rational(1, 6));
    EXPECT_THROW(inverse(series({0, 1})), SeriesError);
}

TEST(QSeries, MixedOrdersTruncate)
{
    const auto s = series({1, 2, 3, 4, 5}) + series({1, 1});
    EXPECT_EQ(s.order(), 1u);
    EXPECT_EQ((series({1, 2, 3}) * series({1, 1})).order(), 1u);
}

TEST(QSeries, EulerProductIsPentagonal)
{
    for (unsigned t : {0u, 1u, 7u, 30u, 60u}) {
        const auto e = euler_product(1, t);
        const auto ref = oracle::pentagonal_euler(t);
        for (unsigned k = 0; k <= t; ++k) EXPECT_EQ(e[k], ref[k]) << k;
    }
}

TEST(QSeries, ScaledEulerProduct)
{
    const auto e3 = euler_product(3, 30);
    EXPECT_EQ(e3, scale_q(euler_product(1, 30), 3));
}

TEST(QSeries, LambdaMatchesThetaQuotient)
{
    const auto lam = lambda_series(40);
    const auto ref = oracle::lambda_from_theta(40);
    for (unsigned k = 0; k <= 40; ++k) EXPECT_EQ(lam[k], ref[k]) << k;
    EXPECT_EQ(lam[1], 16);
    EXPECT_EQ(lam[2], -128);
    EXPECT_EQ(lam[3], 704);
}

TEST(QSeries, LambdaPlusComplementIsOne)
{
    for (unsigned t = 1; t <= 60; t += 7) {
        const auto sum = lambda_series(t) + one_minus_lambda_series(t);
        EXPECT_EQ(sum, TruncatedSeries::constant(1, t)) << t;
    }
}

TEST(QSeries, IntPowIsCompatibleWithMul)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned t = 5 + trial;
        const auto s = random_unit_series(rng, t);
        const long a = trial % 5 - 2;
        const long b = trial % 3;
        EXPECT_EQ(int_pow(s, a + b), int_pow(s, a) * int_pow(s, b));
    }
    const auto s = random_unit_series(rng, 10);
    EXPECT_EQ(int_pow(s, -1) * s, TruncatedSeries::constant(1, 10));
    EXPECT_EQ(int_pow(s, 0), TruncatedSeries::constant(1, 10));
}

TEST(QSeries, ShiftAndDerivative)
{
    const auto s = shift(series({1, 2}), 2);
    EXPECT_EQ(s, series({0, 0, 1, 2}));
    EXPECT_EQ(q_derivative(series({5, 1, 1, 1})), series({0, 1, 2, 3}));
}

TEST(QSeries, ProductFormMatchesEtaQuotient)
{
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const std::int64_t g = std::gcd<std::int64_t>(p + 1, 8);
        const int m = static_cast<int>((p + 1) / g);
        const int n = static_cast<int>(8 / g);
        const unsigned order = 2 * m + 10;
        for (int i = 0; i <= m; ++i)
            for (int h = 0; i + h <= m; ++h) {
                XYParams xp{p, m, n, static_cast<unsigned>(i), static_cast<unsigned>(h)};
                EXPECT_EQ(xy_normalized_lemma(xp, order), xy_normalized_direct(xp, order))
                    << "p=" << p << " i=" << i << " h=" << h;
            }
    }
}

TEST(QSeries, Formatting)
{
    EXPECT_EQ(format_series(lambda_series(3)), "16 q - 128 q^2 + 704 q^3 + O(q^4)");
    EXPECT_EQ(format_series(series({1, 0, -1})), "1 - q^2 + O(q^3)");
}
