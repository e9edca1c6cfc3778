#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodgkin/flagk.hpp"
#include "hodgkin/homology.hpp"
#include "hodgkin/laurent.hpp"

namespace hodgkin::torring {

using flagk::FlagKModule;
using homology::HomologyResult;
using laurent::CharacterSet;
using laurent::LaurentPoly;

/// Element of Lambda^p(Z^n) (x) Z^m; the chain is laid out as in koszul_complex.
struct TorClass {
    std::size_t degree = 0;
    IntVector chain;
    IntVector homology_coords;
    /// Degrees above n carry no chain; the class is zero.
    bool overflow() const { return chain.empty(); }
};

/// Koszul complex of the module together with its homology and wedge bookkeeping.
class TorContext {
public:
    TorContext(const FlagKModule& module, homology::HomologyOptions options = {});

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    const FlagKModule& module() const { return *module_; }
    const homology::ChainComplex& complex() const { return complex_; }
    const HomologyResult& homology() const { return homology_; }
    const homology::SmithAudit& audit() const { return audit_; }
    const std::vector<unsigned>& wedge(std::size_t p) const { return wedges_[p]; }
    std::size_t wedge_index(std::size_t p, unsigned mask) const;

    /// Wraps a chain, checking the cycle condition (DefectError otherwise).
    TorClass make_class(std::size_t degree, IntVector chain) const;
    /// Degree-0 class of 1 (x) [1].
    TorClass unit() const;
    /// Zero class of a degree above n.
    TorClass overflow_class(std::size_t degree) const;

private:
    const FlagKModule* module_;
    std::size_t n_, m_;
    homology::SmithAudit audit_;
    homology::ChainComplex complex_;
    HomologyResult homology_;
    std::vector<std::vector<unsigned>> wedges_;
};

/// Sign of e_S ^ e_T in terms of e_{S u T} (0 if S and T meet).
int wedge_sign(unsigned s, unsigned t);

/// (w (x) x)(v (x) y) = (w ^ v) (x) (x y), products in the module via its
/// multiplication table.
TorClass chain_product(const TorContext& ctx, const TorClass& a, const TorClass& b);

/// Degree-1 generator z_i = sum_j e_j (x) coords(c_ij), with sigma~_i = sum_j c_ij (t_j - 1).
struct Generator {
    TorClass z;
    std::vector<LaurentPoly> c;
};

/// a * z_i, using the Laurent coefficients of z_i acting through M_1..M_n.
TorClass multiply_by_generator(const TorContext& ctx, const TorClass& a, const Generator& z);

/// Builds z_1..z_n and checks the cycle condition sum_j (M_j - I) coords(c_ij) = 0.
std::vector<Generator> change_of_rings_generators(const CharacterSet& chars, const TorContext& ctx);

struct DegreeCertificate {
    std::size_t degree = 0;
    std::size_t rank = 0;
    Integer determinant = 0;
};

struct ExteriorCertificate {
    std::vector<DegreeCertificate> degrees;
    bool determinants_unimodular = false;
    bool anticommute = false;
    bool squares_zero = false;
    /// chain_product and multiply_by_generator agree on z_i * z_j (checked
    /// when the module has a dense multiplication table).
    bool product_routes_agree = true;
    bool routes_compared = false;
    std::string witness;

    bool certified() const { return determinants_unimodular && anticommute && squares_zero && product_routes_agree; }
};

/// Homology coordinates of every z_S, S in lexicographic order, for degree p.
IntMatrix monomial_coordinates(const TorContext& ctx, const std::vector<Generator>& gens, std::size_t p);

ExteriorCertificate certify_exterior(const TorContext& ctx, const std::vector<Generator>& gens,
                                     unsigned threads = 1);

}  // namespace hodgkin::torring
