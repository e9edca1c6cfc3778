#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hodgkin/cache.hpp"
#include "hodgkin/flagk.hpp"
#include "hodgkin/power_series_oracle.hpp"
#include "hodgkin/verify.hpp"

using namespace hodgkin;
using namespace hodgkin::flagk;
using laurent::LaurentPoly;

namespace {

struct Fixture {
    explicit Fixture(const char* t)
        : datum(cartan::build_root_datum(cartan::parse_type(t))),
          weyl(cartan::generate_weyl(datum)),
          chars(laurent::fundamental_characters(datum, weyl))
    {
    }
    cartan::RootDatum datum;
    cartan::WeylGroup weyl;
    laurent::CharacterSet chars;
};

}  // namespace

TEST(FlagK, A1GoldenValues)
{
    // By hand: basis {1, t}, <t^a, t^b> = a + b + 1, so the Gram matrix is
    // [[1,2],[2,3]] with det -1; t^2 = 2t - 1 gives M = [[0,-1],[1,2]].
    Fixture f("A1");
    const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
    EXPECT_EQ(m.basis_weights(), (std::vector<Weight>{Weight{0}, Weight{1}}));
    EXPECT_EQ(m.gram(), (IntMatrix{{1, 2}, {2, 3}}));
    EXPECT_EQ(m.gram_determinant(), -1);
    ASSERT_EQ(m.mult_matrices().size(), 1u);
    EXPECT_EQ(m.mult_matrices()[0], (IntMatrix{{0, -1}, {1, 2}}));
    EXPECT_EQ(m.coords(LaurentPoly::monomial(Weight{2})), (IntVector{-1, 2}));
    EXPECT_EQ(m.coords(LaurentPoly::monomial(Weight{-1})), (IntVector{2, -1}));
    EXPECT_EQ(m.unit_coords(), (IntVector{1, 0}));
}

TEST(FlagK, PairingA1ClosedForm)
{
    // For SU(2), <e^a, 1> = a + 1 for every integer a.
    Fixture f("A1");
    EulerPairing e(f.datum, f.weyl);
    for (int a = -6; a <= 6; ++a) {
        EXPECT_EQ(e.monomial(Weight{a}), a + 1);
        EXPECT_EQ(pairing(f.datum, f.weyl, LaurentPoly::monomial(Weight{a}), LaurentPoly::constant(1, 1)), a + 1);
    }
}

TEST(FlagK, EulerPairingTwoRoutesAndDimensionPolynomial)
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A4", "D4"}) {
        Fixture f(t);
        EulerPairing e(f.datum, f.weyl);
        verify::SuiteOptions o;
        o.trials = 60;
        for (const auto& c : verify::euler_suite(f.datum, f.weyl, e, o))
            EXPECT_TRUE(c.pass) << t << ": " << c.name << " " << c.witness;
    }
}

TEST(FlagK, SeedsGiveUnimodularGram)
{
    for (const char* t : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3"}) {
        Fixture f(t);
        const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
        EXPECT_EQ(m.rank(), f.weyl.order()) << t;
        EXPECT_EQ(boost::multiprecision::abs(m.gram_determinant()), 1) << t;
        EXPECT_EQ(determinant_bareiss(m.gram()), m.gram_determinant()) << t;
        for (const auto& c : m.checks())
            EXPECT_TRUE(c.pass) << t << ": " << c.name;
    }
}

TEST(FlagK, FallbackSearchWithoutSeeds)
{
    for (const char* t : {"A1", "A2", "B2"}) {
        Fixture f(t);
        ModuleOptions o;
        o.search.use_seeds = false;
        const FlagKModule m = build_module(f.datum, f.weyl, f.chars, o);
        EXPECT_EQ(m.seeded(), 0u) << t;
        EXPECT_EQ(boost::multiprecision::abs(m.gram_determinant()), 1) << t;
    }
}

TEST(FlagK, MultiplicationMatchesCoordinatesOfProducts)
{
    Fixture f("B2");
    const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        const LaurentPoly a = verify::random_poly(rng, 2, 3, 2);
        const LaurentPoly b = verify::random_poly(rng, 2, 3, 2);
        const IntVector x = m.coords(a), y = m.coords(b);
        EXPECT_EQ(m.multiply(x, y), m.coords(a * b));
        EXPECT_EQ(m.act(a, y), m.coords(a * b));
        EXPECT_EQ(m.coords(m.representative(x)), x);
        EXPECT_EQ(m.evaluate(a) * y, m.act(a, y));
    }
}

TEST(FlagK, CharactersActAsDimensions)
{
    // chi_j(M) = d_j I: sigma~_j annihilates the module.
    Fixture f("G2");
    const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
    for (std::size_t j = 0; j < f.chars.reduced.size(); ++j)
        EXPECT_TRUE(m.evaluate(f.chars.reduced[j]).is_zero());
}

TEST(FlagK, RationalOracleRankTwo)
{
    for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1"}) {
        Fixture f(t);
        const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
        const auto q = oracle::truncated_quotient(f.datum, f.chars);
        EXPECT_EQ(q.dimension, f.weyl.order()) << t;
        const auto c = oracle::compare_with_module(q, m, f.weyl.order());
        EXPECT_TRUE(c.dimension_match) << t << c.witness;
        EXPECT_TRUE(c.charpoly_match) << t << c.witness;
        EXPECT_TRUE(c.rank_profile_match) << t << c.witness;
    }
}

TEST(Oracle, CharacteristicPolynomialFaddeevLeVerrier)
{
    // det(xI - A) for A = [[2,1],[1,3]] is x^2 - 5x + 5.
    const auto c = oracle::characteristic_polynomial(oracle::to_rational(IntMatrix{{2, 1}, {1, 3}}));
    EXPECT_EQ(c, (std::vector<oracle::Rational>{5, -5, 1}));
    EXPECT_EQ(oracle::rational_rank(oracle::to_rational(IntMatrix{{1, 2}, {2, 4}})), 1u);
}

TEST(Cache, RoundTripAndTamperDetection)
{
    Fixture f("A2");
    const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
    const std::string text = cache::serialize(f.datum.type, f.weyl, m.data());
    std::string why;
    auto back = cache::parse(text, f.datum.type, f.weyl, &why);
    ASSERT_TRUE(back.has_value()) << why;
    EXPECT_EQ(back->basis_weights, m.basis_weights());
    EXPECT_EQ(back->gram, m.gram());
    EXPECT_EQ(back->mult_matrices, m.mult_matrices());

    const FlagKModule again = build_module_from(f.datum, f.weyl, f.chars, *back);
    EXPECT_EQ(again.mult_matrices(), m.mult_matrices());

    std::string tampered = text;
    const auto pos = tampered.find("\"gram\":[[");
    ASSERT_NE(pos, std::string::npos);
    tampered[pos + 9] = tampered[pos + 9] == '1' ? '2' : '1';
    EXPECT_FALSE(cache::parse(tampered, f.datum.type, f.weyl, &why).has_value());
    EXPECT_EQ(why, "checksum mismatch");

    Fixture other("B2");
    EXPECT_FALSE(cache::parse(text, other.datum.type, other.weyl, &why).has_value());
}

TEST(Cache, WrongDataIsRejectedOnRebuild)
{
    Fixture f("A2");
    const FlagKModule m = build_module(f.datum, f.weyl, f.chars);
    ModuleData d = m.data();
    d.mult_matrices[0](0, 0) += 1;
    EXPECT_THROW(build_module_from(f.datum, f.weyl, f.chars, d), CertificationError);
}

TEST(Cache, DirectoryResolution)
{
    EXPECT_EQ(cache::resolve_dir("/x/y"), "/x/y");
    ::setenv("HODGKIN_CACHE_DIR", "/from/env", 1);
    EXPECT_EQ(cache::resolve_dir(""), "/from/env");
    ::unsetenv("HODGKIN_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/xdg", 1);
    EXPECT_EQ(cache::resolve_dir(""), "/xdg/hodgkin");
    ::unsetenv("XDG_CACHE_HOME");
    EXPECT_EQ(cache::fnv1a(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(cache::fnv1a("a"), 0xaf63dc4c8601ec8cull);
}
