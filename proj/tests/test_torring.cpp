#include <gtest/gtest.h>

#include "hodgkin/pipeline.hpp"
#include "hodgkin/torring.hpp"
#include "hodgkin/verify.hpp"

using namespace hodgkin;
using namespace hodgkin::torring;

namespace {

std::unique_ptr<pipeline::Pipeline> run(const char* t)
{
    pipeline::PipelineOptions o;
    o.threads = 1;
    return pipeline::run_pipeline(t, o);
}

}  // namespace

TEST(WedgeSign, Inversions)
{
    EXPECT_EQ(wedge_sign(0b001, 0b010), 1);   // e1 ^ e2
    EXPECT_EQ(wedge_sign(0b010, 0b001), -1);  // e2 ^ e1
    EXPECT_EQ(wedge_sign(0b001, 0b001), 0);
    EXPECT_EQ(wedge_sign(0b101, 0b010), -1);  // e1 e3 ^ e2 = -e1 e2 e3
    EXPECT_EQ(wedge_sign(0b110, 0b001), 1);   // e2 e3 ^ e1 = e1 e2 e3
    EXPECT_EQ(wedge_sign(0, 0b111), 1);
}

TEST(Tor, A1GeneratorByHand)
{
    // sigma~ = t + t^-1 - 2 = (t - 1)(1 - t^-1), so c = 1 - t^-1 and
    // z = coords(1) - coords(t^-1) = (1,0) - (2,-1) = (-1,1).
    auto p = run("A1");
    ASSERT_TRUE(p->all_pass());
    ASSERT_EQ(p->gens.size(), 1u);
    EXPECT_EQ(p->gens[0].z.chain, (IntVector{-1, 1}));
    EXPECT_EQ(laurent::to_string(p->gens[0].c[0]), "t^(0) - t^(-1)");
    EXPECT_EQ(p->tor->complex().d(1), (IntMatrix{{-1, -1}, {1, 1}}));
    // z generates H_1 = Z: its homology coordinate is a unit.
    ASSERT_EQ(p->gens[0].z.homology_coords.size(), 1u);
    EXPECT_EQ(boost::multiprecision::abs(p->gens[0].z.homology_coords[0]), 1);
}

TEST(Tor, RanksAreBinomialAndTorsionFree)
{
    for (const char* t : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3"}) {
        auto p = run(t);
        const std::size_t n = p->n();
        const auto& h = p->tor->homology();
        ASSERT_EQ(h.degrees.size(), n + 1) << t;
        std::size_t total = 0;
        for (std::size_t q = 0; q <= n; ++q) {
            EXPECT_EQ(h.degrees[q].betti, pipeline::binomial(n, q)) << t << " degree " << q;
            EXPECT_TRUE(h.degrees[q].torsion.empty()) << t;
            total += h.degrees[q].betti;
        }
        EXPECT_EQ(total, std::size_t{1} << n) << t;
    }
}

TEST(Tor, ExteriorCertificate)
{
    for (const char* t : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "B3", "C3"}) {
        auto p = run(t);
        EXPECT_TRUE(p->cert.certified()) << t << ": " << p->cert.witness;
        EXPECT_TRUE(p->cert.routes_compared || p->module->rank() > 64) << t;
        for (const auto& d : p->cert.degrees)
            EXPECT_EQ(boost::multiprecision::abs(d.determinant), 1) << t << " degree " << d.degree;
    }
}

TEST(Tor, MonomialCoordinatesA2)
{
    auto p = run("A2");
    for (std::size_t q = 0; q <= 2; ++q) {
        const IntMatrix c = monomial_coordinates(*p->tor, p->gens, q);
        EXPECT_EQ(c.rows(), pipeline::binomial(2, q));
        EXPECT_EQ(boost::multiprecision::abs(determinant(c)), 1);
    }
}

TEST(Tor, RingAxiomsOnRandomClasses)
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"}) {
        auto p = run(t);
        const auto checks = verify::tor_ring_suite(*p);
        ASSERT_FALSE(checks.empty()) << t;
        for (const auto& c : checks)
            EXPECT_TRUE(c.pass) << t << ": " << c.name << " " << c.witness;
    }
}

TEST(Tor, ProductsAboveTopDegreeVanish)
{
    auto p = run("A2");
    const auto top = multiply_by_generator(*p->tor, multiply_by_generator(*p->tor, p->gens[0].z, p->gens[1]), p->gens[0]);
    EXPECT_TRUE(top.overflow());
    EXPECT_EQ(top.degree, 3u);
}

TEST(Tor, NonCycleIsRejected)
{
    auto p = run("A1");
    EXPECT_THROW(p->tor->make_class(1, IntVector{1, 0}), DefectError);
    EXPECT_THROW(p->tor->make_class(1, IntVector{1}), PreconditionError);
}

TEST(Pipeline, DualityAndKRanks)
{
    for (const char* t : {"A1", "A2", "B2", "G2", "A1xA1", "A3"}) {
        auto p = run(t);
        const std::size_t n = p->n();
        ASSERT_EQ(p->ext.degrees.size(), n + 1);
        for (std::size_t q = 0; q <= n; ++q)
            EXPECT_EQ(p->ext.degrees[q].betti, p->tor->homology().degrees[n - q].betti) << t;
        EXPECT_TRUE(p->all_pass()) << t;
    }
}

TEST(Pipeline, ThreadCountDoesNotChangeCertificate)
{
    pipeline::PipelineOptions a, b;
    a.threads = 1;
    b.threads = 3;
    auto x = pipeline::run_pipeline("B2", a), y = pipeline::run_pipeline("B2", b);
    EXPECT_EQ(x->module->mult_matrices(), y->module->mult_matrices());
    for (std::size_t i = 0; i < x->gens.size(); ++i)
        EXPECT_EQ(x->gens[i].z.chain, y->gens[i].z.chain);
    ASSERT_EQ(x->cert.degrees.size(), y->cert.degrees.size());
    for (std::size_t q = 0; q < x->cert.degrees.size(); ++q)
        EXPECT_EQ(x->cert.degrees[q].determinant, y->cert.degrees[q].determinant);
}
