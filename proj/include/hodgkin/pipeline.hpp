#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgkin/cartan.hpp"
#include "hodgkin/flagk.hpp"
#include "hodgkin/homology.hpp"
#include "hodgkin/laurent.hpp"
#include "hodgkin/torring.hpp"

namespace hodgkin::pipeline {

using flagk::Check;

struct PipelineOptions {
    std::uint64_t max_weyl_order = cartan::kDefaultWeylOrderGuard;
    bool verify = true;
    unsigned threads = 0;
    /// Empty: no cache is used.
    std::string cache_dir;
    /// Run the Smith audit on every homology decomposition.
    bool audit = false;
};

/// All stages for one Cartan type. Later stages hold pointers into earlier
/// ones, so a Pipeline is neither copied nor moved.
struct Pipeline {
    Pipeline() = default;
    Pipeline(const Pipeline&) = delete;
    Pipeline& operator=(const Pipeline&) = delete;

    cartan::CartanType type;
    cartan::RootDatum datum;
    cartan::WeylGroup weyl;
    laurent::CharacterSet chars;
    std::optional<flagk::FlagKModule> module;
    std::unique_ptr<torring::TorContext> tor;
    std::vector<torring::Generator> gens;
    torring::ExteriorCertificate cert;
    homology::HomologyResult ext;
    homology::SmithAudit ext_audit;

    /// Stage name -> wall time in milliseconds, in execution order.
    std::vector<std::pair<std::string, double>> timings;
    std::vector<Check> checks;
    bool cache_hit = false;
    /// Set when a stage raised a certification error; later stages did not run.
    bool aborted = false;

    bool all_pass() const;
    std::size_t n() const { return static_cast<std::size_t>(datum.rank); }
};

/// Runs cartan -> laurent -> flagk -> homology -> torring -> duality.
/// Throws UsageError for bad type strings and ResourceError when a guard
/// trips; certification failures are recorded in `checks` instead.
std::unique_ptr<Pipeline> run_pipeline(const std::string& type, const PipelineOptions& options = {});

/// C(n, k).
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace hodgkin::pipeline
