#pragma once

#include <cstddef>
#include <vector>

#include "hodgkin/int_matrix.hpp"
#include "hodgkin/smith.hpp"

namespace hodgkin::homology {

/// Free chain complex C_0 <- C_1 <- ... <- C_top with d_p : C_p -> C_{p-1}.
/// differentials[p] holds d_p (rank(C_{p-1}) x rank(C_p)); differentials[0]
/// is the empty 0 x rank(C_0) map.
class ChainComplex {
public:
    /// Throws PreconditionError on inconsistent shapes or if d_p d_{p+1} != 0.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

    std::size_t top() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const IntMatrix& d(std::size_t p) const { return d_[p]; }
    const std::vector<IntMatrix>& differentials() const { return d_; }

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> d_;
};

/// H_p of a complex, in a fixed basis.
struct DegreeHomology {
    std::size_t betti = 0;
    std::vector<Integer> torsion;    ///< elementary divisors > 1
    /// Cycle vectors: first the torsion generators (matching `torsion`), then
    /// `betti` free generators.
    std::vector<IntVector> cycle_basis;
    /// Rows of the reduction map C_p cycles -> homology coordinates; entry k of
    /// reduce(z) is meaningful modulo torsion[k] for the torsion part.
    IntMatrix reduce_rows;

    std::size_t generators() const { return cycle_basis.size(); }
    /// Homology coordinates of a cycle (torsion coordinates reduced to [0, d)).
    IntVector reduce(const IntVector& cycle) const;
};

struct HomologyResult {
    std::vector<DegreeHomology> degrees;

    std::vector<std::size_t> betti() const;
    bool torsion_free() const;
};

struct HomologyOptions {
    unsigned threads = 1;
    /// Checks L A R = D and unimodularity of the transforms for every Smith
    /// decomposition performed.
    bool audit = false;
};

/// Record of a Smith audit (reconstruction and unimodularity of transforms).
struct SmithAudit {
    std::size_t decompositions = 0;
    std::size_t failures = 0;
};

HomologyResult homology_of(const ChainComplex& complex, const HomologyOptions& options = {},
                           SmithAudit* audit = nullptr);

/// Koszul complex of the commuting operators A_1..A_n on Z^m:
/// C_p = Lambda^p(Z^n) (x) Z^m, d(e_S (x) x) = sum_k (-1)^{k+1} e_{S - i_k} (x) (A_{i_k} - I) x.
/// Wedge basis of degree p: the p-subsets in lexicographic order; the chain
/// vector of e_S (x) x is block S of length m.
ChainComplex koszul_complex(std::size_t n, const std::vector<IntMatrix>& action);

/// Cohomology of the dual cochain complex Hom(C, Z): degrees[p] is Ext^p.
HomologyResult ext_via_cochain(std::size_t n, const std::vector<IntMatrix>& action,
                               const HomologyOptions& options = {}, SmithAudit* audit = nullptr);

/// Subsets of {0..n-1} of size p in lexicographic order, as bitmasks.
std::vector<unsigned> wedge_basis(std::size_t n, std::size_t p);

/// Smith decomposition with every transform requested, followed by the full
/// audit A = U D V with |det U| = |det V| = 1. Returns false on a failed audit.
bool audit_smith(const IntMatrix& a);

}  // namespace hodgkin::homology
