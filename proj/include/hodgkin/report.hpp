#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgkin/pipeline.hpp"

namespace hodgkin::report {

inline constexpr int kReportFormatVersion = 1;
inline constexpr const char* kEngineVersion = "1.0.0";

struct TorRow {
    std::size_t degree = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

struct E2Row {
    std::size_t p = 0;
    std::size_t rank = 0;
};

struct KReport {
    std::string cartan_type;
    int rank = 0;
    std::size_t weyl_order = 0;
    std::optional<Integer> gram_determinant;
    std::size_t basis_seeded = 0;
    int basis_search_radius = 0;
    std::vector<TorRow> tor_table;
    std::vector<TorRow> ext_table;
    std::vector<E2Row> e2_table;
    std::size_t k0_rank = 0;
    std::size_t k1_rank = 0;
    std::vector<torring::DegreeCertificate> exterior_degrees;
    bool exterior_certified = false;
    std::vector<flagk::Check> checks;
    std::vector<std::pair<std::string, double>> timings_ms;

    bool all_pass() const;
};

/// K^j rank = sum of Tor ranks in degrees of parity j; E_2^{p,0} = rank Tor_{n-p}.
KReport assemble_report(const pipeline::Pipeline& p);

/// Stable key order; timings omitted when `timings` is false.
std::string to_json(const KReport& r, bool timings = true);

std::string to_text(const KReport& r, bool timings = true);

}  // namespace hodgkin::report
