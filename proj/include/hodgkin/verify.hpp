#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hodgkin/pipeline.hpp"

namespace hodgkin::verify {

using flagk::Check;

struct SuiteOptions {
    std::uint64_t seed = 0x5eed;
    /// Randomized inputs per type for the Demazure and Laurent suites.
    std::size_t trials = 100;
};

/// Random Laurent polynomial with up to `terms` terms, exponents in [-range, range].
laurent::LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms = 4, int range = 2);

/// A random reduced word of w, built by peeling off left descents.
std::vector<int> random_reduced_word(std::mt19937_64& rng, const cartan::RootDatum& datum,
                                     const cartan::WeylGroup& weyl, const cartan::SmallMatrix& w);

/// Closed-form order, det = +-1, s_i^2 = 1, w0 negates the simple roots, l(w0) = |positive roots|.
std::vector<Check> weyl_suite(const cartan::RootDatum& datum, const cartan::WeylGroup& weyl);

/// D_i D_i f = D_i f and s_i D_i f = D_i f.
std::vector<Check> demazure_suite(const cartan::RootDatum& datum, const cartan::WeylGroup& weyl,
                                  const SuiteOptions& options = {});

/// D_{w0} does not depend on the reduced word: every word for rank <= 3,
/// a random sample of words above.
std::vector<Check> reduced_word_suite(const cartan::RootDatum& datum, const cartan::WeylGroup& weyl,
                                      const SuiteOptions& options = {});

/// Characters are W-invariant and their augmentations obey the Weyl dimension formula.
std::vector<Check> character_suite(const cartan::RootDatum& datum, const cartan::WeylGroup& weyl,
                                   const SuiteOptions& options = {});

/// The memoized pairing agrees with the literal D_{w0} route and with the Weyl
/// dimension polynomial (extended to all integral weights).
std::vector<Check> euler_suite(const cartan::RootDatum& datum, const cartan::WeylGroup& weyl,
                               const flagk::EulerPairing& euler, const SuiteOptions& options = {});

/// Commutative ring axioms and the augmentation-ideal decomposition round trip.
std::vector<Check> laurent_suite(int nvars, const SuiteOptions& options = {});

/// Random integer matrices: L A R = D, unimodular transforms, divisibility, and
/// invariant factors equal to the determinantal divisors (gcd of k x k minors).
std::vector<Check> smith_suite(const SuiteOptions& options = {});

/// Invariant factors from determinantal divisors; independent of elimination.
std::vector<Integer> determinantal_invariant_factors(const IntMatrix& a);

/// d^2 = 0 on the Koszul complex and on its dual cochain complex.
std::vector<Check> complex_suite(const pipeline::Pipeline& p);

/// Hand-derived values for A1 (empty for other types).
std::vector<Check> golden_a1(const pipeline::Pipeline& p);

/// Comparison with the rational truncated-power-series model (rank <= 2).
std::vector<Check> oracle_suite(const pipeline::Pipeline& p);

/// Unit, associativity and graded commutativity of the product on Tor for
/// random classes (modules with a dense multiplication table only).
std::vector<Check> tor_ring_suite(const pipeline::Pipeline& p, const SuiteOptions& options = {});

enum class Level { Fast, Full };

struct VerifyResult {
    std::unique_ptr<pipeline::Pipeline> pipeline;
    std::vector<Check> checks;
    bool all_pass() const;
};

/// fast: the pipeline checks (plus the A1 golden values); full: also every
/// property suite, with Smith audits enabled.
VerifyResult run_verify(const std::string& type, Level level, pipeline::PipelineOptions options = {},
                        const SuiteOptions& suite = {});

}  // namespace hodgkin::verify
