#include <gtest/gtest.h>

#include "hodgkin/laurent.hpp"
#include "hodgkin/verify.hpp"

using namespace hodgkin;
using namespace hodgkin::laurent;

namespace {

LaurentPoly mono(std::initializer_list<int> e, long c = 1)
{
    return LaurentPoly::monomial(Weight(e), Integer(c));
}

const std::vector<const char*> kTypes = {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3", "A4", "D4"};

}  // namespace

TEST(LaurentPoly, ArithmeticAndCanonicalForm)
{
    LaurentPoly f = mono({1, 0}) + mono({0, -1}, 2) - mono({1, 0});
    EXPECT_EQ(f, mono({0, -1}, 2));
    EXPECT_EQ(to_string(mono({1, 0}) - mono({0, 0}, 2)), "t^(1,0) - 2*t^(0,0)");
    EXPECT_EQ(to_string(LaurentPoly(2)), "0");
    EXPECT_EQ((mono({1}) + mono({-1})) * (mono({1}) - mono({-1})), mono({2}) - mono({-2}));
    EXPECT_EQ(augmentation(mono({3, 1}, 4) - mono({0, 0})), 3);
    EXPECT_THROW(mono({1}) + mono({1, 0}), PreconditionError);
}

TEST(LaurentPoly, RingAxiomsRandomized)
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : verify::laurent_suite(n))
            EXPECT_TRUE(c.pass) << n << ": " << c.name << " " << c.witness;
}

TEST(AugmentationIdeal, DecomposeRoundTrip)
{
    const LaurentPoly f = mono({2, -1}) - mono({0, 0});
    const auto c = decompose_augmentation_ideal(f);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(assemble_augmentation_ideal(c), f);
    EXPECT_THROW(decompose_augmentation_ideal(mono({1, 0})), PreconditionError);
}

TEST(Demazure, A1HandValues)
{
    const auto d = cartan::build_root_datum(cartan::parse_type("A1"));
    // alpha = 2 omega: D(e^omega) = e^omega + e^-omega, D(1) = 1, D(e^-omega) = 0.
    EXPECT_EQ(demazure(d, 0, mono({1})), mono({1}) + mono({-1}));
    EXPECT_EQ(demazure(d, 0, mono({0})), mono({0}));
    EXPECT_TRUE(demazure(d, 0, mono({-1})).is_zero());
    EXPECT_EQ(demazure(d, 0, mono({-2})), -mono({0}));
    EXPECT_EQ(demazure(d, 0, mono({2})), mono({2}) + mono({0}) + mono({-2}));
}

TEST(Demazure, IdempotentAndInvariant)
{
    for (const char* t : kTypes) {
        const auto d = cartan::build_root_datum(cartan::parse_type(t));
        const auto w = cartan::generate_weyl(d);
        for (const auto& c : verify::demazure_suite(d, w))
            EXPECT_TRUE(c.pass) << t << ": " << c.name << " " << c.witness;
    }
}

TEST(Demazure, ReducedWordIndependence)
{
    for (const char* t : kTypes) {
        const auto d = cartan::build_root_datum(cartan::parse_type(t));
        const auto w = cartan::generate_weyl(d);
        for (const auto& c : verify::reduced_word_suite(d, w))
            EXPECT_TRUE(c.pass) << t << ": " << c.name << " " << c.witness;
    }
}

TEST(Characters, FundamentalCharactersSmallTypes)
{
    const auto a2 = cartan::build_root_datum(cartan::parse_type("A2"));
    const auto w = cartan::generate_weyl(a2);
    // Weights of the standard representation of SU(3): omega_1, omega_2 - omega_1, -omega_2.
    EXPECT_EQ(character(a2, w, Weight{1, 0}), mono({1, 0}) + mono({-1, 1}) + mono({0, -1}));
    const auto set = fundamental_characters(a2, w);
    EXPECT_EQ(set.dimensions, (std::vector<Integer>{3, 3}));
    for (std::size_t i = 0; i < 2; ++i)
        EXPECT_TRUE(augmentation(set.reduced[i]).is_zero());
    EXPECT_THROW(character(a2, w, Weight{-1, 0}), PreconditionError);
}

TEST(Characters, DimensionFormulaAndInvariance)
{
    for (const char* t : kTypes) {
        const auto d = cartan::build_root_datum(cartan::parse_type(t));
        const auto w = cartan::generate_weyl(d);
        for (const auto& c : verify::character_suite(d, w))
            EXPECT_TRUE(c.pass) << t << ": " << c.name << " " << c.witness;
    }
}

TEST(Characters, FundamentalDimensions)
{
    // Known fundamental dimensions.
    struct Case {
        const char* type;
        std::vector<Integer> dims;
    };
    for (const Case& c : {Case{"A3", {4, 6, 4}}, Case{"B3", {7, 21, 8}}, Case{"C3", {6, 14, 14}},
                          Case{"D4", {8, 28, 8, 8}}, Case{"G2", {7, 14}}}) {
        const auto d = cartan::build_root_datum(cartan::parse_type(c.type));
        const auto w = cartan::generate_weyl(d);
        EXPECT_EQ(fundamental_characters(d, w).dimensions, c.dims) << c.type;
    }
}

TEST(WeylAct, ReflectionOnMonomials)
{
    const auto d = cartan::build_root_datum(cartan::parse_type("A2"));
    const auto w = cartan::generate_weyl(d);
    // s_1 omega_1 = omega_1 - alpha_1 = (-1, 1).
    EXPECT_EQ(weyl_act(w.simple_reflections[0], mono({1, 0})), mono({-1, 1}));
}
