#include <gtest/gtest.h>

#include <algorithm>

#include "hodgkin/homology.hpp"
#include "hodgkin/smith.hpp"
#include "hodgkin/verify.hpp"

using namespace hodgkin;
using namespace hodgkin::homology;

TEST(Smith, KnownDiagonal)
{
    // Invariant factors of [[2,4,4],[-6,6,12],[10,-4,-16]] are 2, 6, 12.
    const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const SmithDecomposition s = smith_decompose(a, {true, false, true, false});
    EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 6, 12}));
    EXPECT_EQ(s.rank, 3u);
    EXPECT_EQ(verify::determinantal_invariant_factors(a), s.diagonal);
    const SmithForm f = smith_normal_form(a);
    EXPECT_EQ(f.U * f.D * f.V, a);
}

TEST(Smith, RandomizedAudits)
{
    verify::SuiteOptions o;
    o.trials = 300;
    for (const auto& c : verify::smith_suite(o))
        EXPECT_TRUE(c.pass) << c.name << " " << c.witness;
}

TEST(Smith, LargeEntriesFallBackToUnbounded)
{
    const long big = 1L << 62;
    const IntMatrix a{{big, big - 1}, {big - 1, big - 2}};
    EXPECT_TRUE(audit_smith(a));
    const SmithDecomposition s = smith_decompose(a, {});
    EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 1}));
}

TEST(Homology, CircleAndTorsion)
{
    // Cellular circle: d_1 = [0]; H = (Z, Z).
    ChainComplex circle({1, 1}, {IntMatrix(0, 1), IntMatrix{{0}}});
    EXPECT_EQ(homology_of(circle).betti(), (std::vector<std::size_t>{1, 1}));
    // RP^2: Z <-0- Z <-2- Z gives H = (Z, Z/2, 0).
    ChainComplex rp2({1, 1, 1}, {IntMatrix(0, 1), IntMatrix{{0}}, IntMatrix{{2}}});
    const HomologyResult h = homology_of(rp2);
    EXPECT_EQ(h.betti(), (std::vector<std::size_t>{1, 0, 0}));
    EXPECT_EQ(h.degrees[1].torsion, (std::vector<Integer>{2}));
    EXPECT_FALSE(h.torsion_free());
    EXPECT_EQ(h.degrees[1].reduce(IntVector{3}), (IntVector{1}));
}

TEST(Homology, RejectsNonComplex)
{
    EXPECT_THROW(ChainComplex({1, 1, 1}, {IntMatrix(0, 1), IntMatrix{{1}}, IntMatrix{{1}}}), PreconditionError);
    EXPECT_THROW(ChainComplex({1, 2}, {IntMatrix(0, 1), IntMatrix{{1}}}), PreconditionError);
}

TEST(Homology, ReduceIsInverseOfCycleBasis)
{
    // Koszul complex of two commuting unipotent operators.
    IntMatrix n1{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    IntMatrix a = IntMatrix::identity(3) + n1, b = IntMatrix::identity(3) + n1 * n1;
    const ChainComplex c = koszul_complex(2, {a, b});
    const HomologyResult h = homology_of(c);
    for (std::size_t p = 0; p < h.degrees.size(); ++p) {
        const auto& d = h.degrees[p];
        for (std::size_t k = 0; k < d.generators(); ++k) {
            IntVector expected(d.generators());
            expected[k] = 1;
            EXPECT_EQ(d.reduce(d.cycle_basis[k]), expected);
        }
    }
}

TEST(Koszul, IdentityActionIsExterior)
{
    // A_i = I on Z: all differentials vanish, H_p = Z^{C(n,p)}.
    const std::size_t n = 3;
    std::vector<IntMatrix> act(n, IntMatrix::identity(1));
    const HomologyResult h = homology_of(koszul_complex(n, act));
    EXPECT_EQ(h.betti(), (std::vector<std::size_t>{1, 3, 3, 1}));
    EXPECT_TRUE(h.torsion_free());
}

TEST(Koszul, MultiplicationByTwoGivesTorsion)
{
    // A = 3 on Z (so A - I = 2): H_0 = Z/2, H_1 = 0.
    const HomologyResult h = homology_of(koszul_complex(1, {IntMatrix{{3}}}));
    EXPECT_EQ(h.degrees[0].torsion, (std::vector<Integer>{2}));
    EXPECT_EQ(h.degrees[1].betti, 0u);
}

TEST(Koszul, RejectsNonCommuting)
{
    EXPECT_THROW(koszul_complex(2, {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}}}), PreconditionError);
}

TEST(Koszul, DualityAndAudit)
{
    IntMatrix n1{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    std::vector<IntMatrix> act{IntMatrix::identity(3) + n1, IntMatrix::identity(3) + n1 * n1};
    HomologyOptions o;
    o.audit = true;
    SmithAudit audit, ext_audit;
    const HomologyResult tor = homology_of(koszul_complex(2, act), o, &audit);
    const HomologyResult ext = ext_via_cochain(2, act, o, &ext_audit);
    EXPECT_GT(audit.decompositions, 0u);
    EXPECT_EQ(audit.failures, 0u);
    EXPECT_EQ(ext_audit.failures, 0u);
    // Universal coefficients: rank Ext^q = rank H_q.
    EXPECT_EQ(tor.betti(), ext.betti());
}

TEST(Koszul, ExtTorsionShiftsUp)
{
    // Universal coefficients: Ext^1 picks up the torsion of H_0.
    const HomologyResult ext = ext_via_cochain(1, {IntMatrix{{3}}});
    EXPECT_TRUE(ext.degrees[0].torsion.empty());
    EXPECT_EQ(ext.degrees[0].betti, 0u);
    EXPECT_EQ(ext.degrees[1].torsion, (std::vector<Integer>{2}));
}

TEST(Koszul, ThreadCountDoesNotChangeResults)
{
    IntMatrix n1{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
    std::vector<IntMatrix> act{IntMatrix::identity(4) + n1, IntMatrix::identity(4) + n1 * n1,
                               IntMatrix::identity(4) + n1 * n1 * n1};
    const ChainComplex c = koszul_complex(3, act);
    HomologyOptions one, four;
    four.threads = 4;
    const HomologyResult a = homology_of(c, one), b = homology_of(c, four);
    ASSERT_EQ(a.degrees.size(), b.degrees.size());
    for (std::size_t p = 0; p < a.degrees.size(); ++p) {
        EXPECT_EQ(a.degrees[p].betti, b.degrees[p].betti);
        EXPECT_EQ(a.degrees[p].torsion, b.degrees[p].torsion);
        EXPECT_EQ(a.degrees[p].cycle_basis, b.degrees[p].cycle_basis);
    }
}

TEST(Koszul, WedgeBasisLexicographic)
{
    EXPECT_EQ(wedge_basis(3, 2), (std::vector<unsigned>{0b011, 0b101, 0b110}));
    EXPECT_EQ(wedge_basis(4, 0), (std::vector<unsigned>{0}));
    EXPECT_EQ(wedge_basis(4, 3).size(), 4u);
}
