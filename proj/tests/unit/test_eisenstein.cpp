#include "support.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/formal_ram.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mfdr;
using test::series;

TEST(Bernoulli, Values)
{
    EXPECT_EQ(bernoulli(2), frac(1, 6));
    EXPECT_EQ(bernoulli(4), frac(-1, 30));
    EXPECT_EQ(bernoulli(12), frac(-691, 2730));
    EXPECT_THROW(bernoulli(3), DomainError);
}

TEST(Eisenstein, RawG4)
{
    EXPECT_EQ(eisenstein(4, 5, false), series(0, {"1/240", "1", "9", "28", "73"}, 5));
}

TEST(Eisenstein, NormalizedE2)
{
    EXPECT_EQ(eisenstein(2, 4, true), series(0, {"1", "-24", "-72", "-96"}, 4));
}

TEST(Eisenstein, RawG12)
{
    EXPECT_EQ(eisenstein(12, 4, false), series(0, {"691/65520", "1", "2049", "177148"}, 4));
}

TEST(Delta, BothRoutes)
{
    QSeries want = series(1, {"1", "-24", "252", "-1472"}, 5);
    EXPECT_EQ(delta_q(5, DeltaRoute::product), want);
    EXPECT_EQ(delta_q(5, DeltaRoute::eisenstein), want);
    EXPECT_NO_THROW(delta_q_checked(60));
}

TEST(Delta, TauMultiplicative)
{
    EXPECT_EQ(ramanujan_tau(2), -24);
    EXPECT_EQ(ramanujan_tau(3), 252);
    EXPECT_EQ(ramanujan_tau(6), ramanujan_tau(2) * ramanujan_tau(3));
    // tau(4) = tau(2)^2 - 2^11
    EXPECT_EQ(ramanujan_tau(4), ramanujan_tau(2) * ramanujan_tau(2) - 2048);
}

TEST(DivisorSigma, Small)
{
    EXPECT_EQ(divisor_sigma(1, 6), 12);
    EXPECT_EQ(divisor_sigma(3, 2), 9);
    EXPECT_EQ(divisor_sigma(0, 12), 6);
}

TEST(FormalRAM, FallingFactorial)
{
    // d_-1 then d_1: (3 - 1)(2 + 1) = 3 * 2
    FormalRAM x = maass_ladder(FormalRAM::basis(3, 2), 1);
    FormalRAM want;
    want.add(1, 2, 6);
    EXPECT_EQ(x, want);
}

TEST(FormalRAM, ZeroFactor)
{
    FormalRAM x = maass_ladder(FormalRAM::basis(2, 0), 2);
    EXPECT_TRUE(x.terms.empty());
}

TEST(FormalRAM, LadderEqualsIteratedD)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ad(-5, 12), bd(0, 6), nd(0, 8);
    for (int i = 0; i < 200; ++i) {
        int a = ad(rng), b = bd(rng), n = nd(rng);
        FormalRAM x = FormalRAM::basis(a, b);
        EXPECT_EQ(maass_ladder(x, n), formal_bol(x, n + 1)) << "a=" << a << " b=" << b << " n=" << n;
    }
}
