#include <gtest/gtest.h>

#include <random>

#include "hodgkin/int_matrix.hpp"
#include "hodgkin/modular.hpp"
#include "hodgkin/smith.hpp"

using namespace hodgkin;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range)
{
    std::uniform_int_distribution<int> e(-range, range);
    IntMatrix a(r, c);
    for (auto& x : a.data())
        x = e(rng);
    return a;
}

// Product of random elementary matrices: determinant +-1 by construction.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps)
{
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> k(-3, 3);
    IntMatrix a = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (std::size_t c = 0; c < n; ++c)
                a(i, c) = -a(i, c);
            continue;
        }
        const int f = k(rng);
        for (std::size_t c = 0; c < n; ++c)
            a(i, c) += f * a(j, c);
    }
    return a;
}

Integer cofactor3(const IntMatrix& a)
{
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST(Checked64, OverflowThrows)
{
    const Checked64 big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + Checked64(1), Overflow);
    EXPECT_THROW(big * Checked64(2), Overflow);
    EXPECT_THROW(-Checked64(std::numeric_limits<std::int64_t>::min()), Overflow);
    EXPECT_EQ((Checked64(7) * Checked64(-6)).value(), -42);
}

TEST(Matrix, ProductFallsBackOnOverflow)
{
    const long big = 1L << 40;
    IntMatrix a{{big, big}, {0, 1}};
    IntMatrix p = a * a;
    EXPECT_EQ(p(0, 0), Integer(big) * big);
    EXPECT_EQ(p(0, 1), Integer(big) * big + big);
}

TEST(Determinant, CofactorOracle3x3)
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        IntMatrix a = random_matrix(rng, 3, 3, 9);
        EXPECT_EQ(determinant(a), cofactor3(a));
        EXPECT_EQ(determinant_bareiss(a), cofactor3(a));
    }
}

TEST(Determinant, ModularMatchesBareiss)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 9;
        IntMatrix a = random_matrix(rng, n, n, t % 2 ? 1000000 : 5);
        EXPECT_EQ(determinant(a), determinant_bareiss(a)) << to_string(a);
    }
}

TEST(Determinant, SingularAndEmpty)
{
    EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(determinant(IntMatrix{{0, 0}, {0, 5}}), 0);
    EXPECT_THROW(determinant(IntMatrix(2, 3)), PreconditionError);
}

TEST(Determinant, HadamardBoundHolds)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        IntMatrix a = random_matrix(rng, 6, 6, 50);
        const Integer d = determinant(a);
        if (d != 0)
            EXPECT_LE(std::log2(boost::multiprecision::abs(d).convert_to<double>()), modular::hadamard_log2(a) + 1e-9);
    }
}

TEST(UnimodularInverse, RandomElementaryProducts)
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 8;
        IntMatrix a = random_unimodular(rng, n, 40);
        auto inv = modular::unimodular_inverse(a);
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(a * *inv, IntMatrix::identity(n));
        EXPECT_EQ(*inv * a, IntMatrix::identity(n));
        EXPECT_EQ(homology::inverse_unimodular(a), *inv);
    }
}

TEST(UnimodularInverse, RejectsNonUnimodular)
{
    EXPECT_FALSE(modular::unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}).has_value());
    EXPECT_FALSE(modular::unimodular_inverse(IntMatrix{{1, 1}, {1, 1}}).has_value());
    EXPECT_THROW(homology::inverse_unimodular(IntMatrix{{3}}), PreconditionError);
}

TEST(Rank, MatchesModularIndependentRows)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t k = 1 + t % 4;
        IntMatrix a = random_matrix(rng, 6, k, 4) * random_matrix(rng, k, 5, 4);
        EXPECT_EQ(rank(a), modular::independent_rows(a, 6).size());
        EXPECT_LE(rank(a), k);
    }
}

TEST(Modular, PrimesAreDescendingAndPrime)
{
    const auto& ps = modular::primes(8);
    ASSERT_GE(ps.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_TRUE(modular::is_prime(ps[k]));
        EXPECT_LT(ps[k], 1ull << 62);
        if (k)
            EXPECT_LT(ps[k], ps[k - 1]);
    }
    EXPECT_FALSE(modular::is_prime(561));
    EXPECT_TRUE(modular::is_prime(2147483647));
}

TEST(Matrix, PowerAndIdentity)
{
    IntMatrix a{{1, 1}, {0, 1}};
    EXPECT_EQ(power(a, 5), (IntMatrix{{1, 5}, {0, 1}}));
    EXPECT_EQ(power(a, 0), IntMatrix::identity(2));
}
