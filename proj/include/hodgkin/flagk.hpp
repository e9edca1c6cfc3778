#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodgkin/cartan.hpp"
#include "hodgkin/int_matrix.hpp"
#include "hodgkin/laurent.hpp"

namespace hodgkin::flagk {

using cartan::RootDatum;
using cartan::WeylGroup;
using laurent::CharacterSet;
using laurent::LaurentPoly;

/// <f, g> = augmentation(D_{w0}(f g)), evaluated literally.
Integer pairing(const RootDatum& datum, const WeylGroup& weyl, const LaurentPoly& f, const LaurentPoly& g);

/// The linear functional f -> augmentation(D_{w0} f), memoized per monomial.
/// A monomial e^mu is first moved to the dominant chamber with the dot action
/// (D_i e^mu = -D_i e^{s_i . mu}, and D_i e^mu = 0 when mu_i = -1); the
/// dominant value is computed with the Demazure operators. Thread-safe.
class EulerPairing {
public:
    EulerPairing(const RootDatum& datum, const WeylGroup& weyl);

    Integer monomial(const Weight& mu) const;
    Integer operator()(const LaurentPoly& f) const;
    Integer operator()(const LaurentPoly& f, const LaurentPoly& g) const { return (*this)(f * g); }

    std::size_t cached_dominant_values() const;

private:
    Integer dominant(const Weight& lambda) const;

    const RootDatum* datum_;
    const WeylGroup* weyl_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Weight, Integer, WeightHash> by_monomial_;
    mutable std::unordered_map<Weight, Integer, WeightHash> by_dominant_;
};

struct BasisSearchOptions {
    bool use_seeds = true;
    int max_radius = 4;
};

struct BasisSelection {
    std::vector<Weight> weights;   ///< canonical order: (l1 norm, lex)
    std::size_t seeded = 0;        ///< accepted weights that came from the seed list
    int radius = 0;                ///< ball radius at which the search succeeded
};

/// Seed weights w^{-1}(-sum_{i : w^{-1} alpha_i < 0} omega_i), one per Weyl element.
std::vector<Weight> seed_weights(const RootDatum& datum, const WeylGroup& weyl);

/// Greedy unimodular completion over a pool of monomials (seeds first, then an
/// l-infinity ball of growing radius). Throws ResourceError when the largest
/// radius fails.
BasisSelection select_basis(const RootDatum& datum, const WeylGroup& weyl, const EulerPairing& pairing,
                            const BasisSearchOptions& options = {});

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct ModuleOptions {
    BasisSearchOptions search;
    /// Dense multiplication table up to this rank; lazily memoized above.
    std::size_t dense_table_limit = 64;
    bool verify = true;
    unsigned threads = 0;
    std::uint64_t seed = 0x5eed;
};

/// Precomputed data that fully determines a module (used by the cache).
struct ModuleData {
    std::vector<Weight> basis_weights;
    IntMatrix gram;
    std::vector<IntMatrix> mult_matrices;
    std::size_t seeded = 0;
    int radius = 0;
};

/// Free Z-module model of K(G/T) = R[T] (x)_{R[G]} Z.
class FlagKModule {
public:
    std::size_t rank() const { return basis_.size(); }
    int lattice_rank() const { return datum_->rank; }
    const std::vector<Weight>& basis_weights() const { return basis_; }
    const IntMatrix& gram() const { return gram_; }
    const Integer& gram_determinant() const { return gram_det_; }
    const IntMatrix& gram_inverse() const { return gram_inv_; }
    const std::vector<IntMatrix>& mult_matrices() const { return mult_; }
    const std::vector<IntMatrix>& mult_matrix_inverses() const { return mult_inv_; }
    const IntVector& unit_coords() const { return unit_; }
    const std::vector<Check>& checks() const { return checks_; }
    std::size_t seeded() const { return seeded_; }
    int search_radius() const { return radius_; }
    bool has_dense_table() const { return !table_.empty(); }
    const RootDatum& datum() const { return *datum_; }
    const EulerPairing& euler() const { return *euler_; }

    /// Coordinates of the class of f: solves gram * a = (<f, b_u>)_u.
    IntVector coords(const LaurentPoly& f) const;
    /// sum_u x_u e^{lambda_u}.
    LaurentPoly representative(const IntVector& x) const;
    /// Structure constants b_u * b_v.
    IntVector basis_product(std::size_t u, std::size_t v) const;
    /// Product of two classes, bilinear in the structure constants.
    IntVector multiply(const IntVector& x, const IntVector& y) const;
    /// f(M_1, ..., M_n) x, i.e. coords(f * representative(x)), by repeated matrix-vector products.
    IntVector act(const LaurentPoly& f, const IntVector& x) const;
    /// Evaluates a Laurent polynomial on the commuting matrices M_1..M_n.
    IntMatrix evaluate(const LaurentPoly& f) const;

    ModuleData data() const;

private:
    friend FlagKModule build_module(const RootDatum&, const WeylGroup&, const CharacterSet&, const ModuleOptions&);
    friend FlagKModule build_module_from(const RootDatum&, const WeylGroup&, const CharacterSet&, ModuleData,
                                         const ModuleOptions&);

    IntVector solve_gram(const IntVector& rhs) const;
    void assemble(const CharacterSet& chars, const ModuleOptions& options, bool have_matrices);

    const RootDatum* datum_ = nullptr;
    const WeylGroup* weyl_ = nullptr;
    std::shared_ptr<EulerPairing> euler_;
    std::vector<Weight> basis_;
    IntMatrix gram_;
    Integer gram_det_;
    IntMatrix gram_inv_;
    std::optional<Matrix<Checked64>> gram_inv_fast_;
    std::vector<IntMatrix> mult_;
    std::vector<IntMatrix> mult_inv_;
    std::vector<std::optional<Matrix<Checked64>>> mult_fast_;
    std::vector<std::optional<Matrix<Checked64>>> mult_inv_fast_;
    IntVector unit_;
    std::vector<IntVector> table_;
    std::shared_ptr<std::mutex> lazy_mutex_ = std::make_shared<std::mutex>();
    std::shared_ptr<std::unordered_map<std::size_t, IntVector>> lazy_table_ =
        std::make_shared<std::unordered_map<std::size_t, IntVector>>();
    std::vector<Check> checks_;
    std::size_t seeded_ = 0;
    int radius_ = 0;
};

/// Selects a basis, builds M_i and the multiplication table, and establishes
/// the module invariants. Throws CertificationError naming a failed check.
FlagKModule build_module(const RootDatum& datum, const WeylGroup& weyl, const CharacterSet& chars,
                         const ModuleOptions& options = {});

/// Rebuilds a module from cached data, re-running the invariant checks.
FlagKModule build_module_from(const RootDatum& datum, const WeylGroup& weyl, const CharacterSet& chars,
                              ModuleData data, const ModuleOptions& options = {});

}  // namespace hodgkin::flagk
