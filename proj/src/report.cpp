#include "hodgkin/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hodgkin::report {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

std::vector<TorRow> table_of(const homology::HomologyResult& h)
{
    std::vector<TorRow> rows;
    for (std::size_t q = 0; q < h.degrees.size(); ++q)
        rows.push_back({q, h.degrees[q].betti, h.degrees[q].torsion});
    return rows;
}

json rows_json(const std::vector<TorRow>& rows)
{
    json a = json::array();
    for (const auto& r : rows) {
        json t = json::array();
        for (const auto& d : r.torsion)
            t.push_back(integer_json(d));
        a.push_back({{"degree", r.degree}, {"rank", r.rank}, {"torsion", std::move(t)}});
    }
    return a;
}

std::string torsion_text(const std::vector<Integer>& t)
{
    if (t.empty())
        return "-";
    std::string s;
    for (const auto& d : t)
        s += (s.empty() ? "Z/" : " Z/") + d.str();
    return s;
}

}  // namespace

bool KReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const flagk::Check& c) { return c.pass; });
}

KReport assemble_report(const pipeline::Pipeline& p)
{
    KReport r;
    r.cartan_type = p.type.to_string();
    r.rank = p.datum.rank;
    r.weyl_order = p.weyl.order();
    if (p.module) {
        r.gram_determinant = p.module->gram_determinant();
        r.basis_seeded = p.module->seeded();
        r.basis_search_radius = p.module->search_radius();
    }
    if (p.tor) {
        r.tor_table = table_of(p.tor->homology());
        const std::size_t n = p.n();
        for (std::size_t q = 0; q <= n && q < r.tor_table.size(); ++q)
            r.e2_table.push_back({q, r.tor_table[n - q].rank});
        for (const auto& row : r.tor_table)
            (row.degree % 2 ? r.k1_rank : r.k0_rank) += row.rank;
    }
    r.ext_table = table_of(p.ext);
    r.exterior_degrees = p.cert.degrees;
    r.exterior_certified = !p.aborted && p.cert.certified();
    r.checks = p.checks;
    if (p.aborted && r.all_pass())
        r.checks.push_back({"pipeline_complete", false, "a stage did not finish"});
    r.timings_ms = p.timings;
    return r;
}

std::string to_json(const KReport& r, bool timings)
{
    json j;
    j["format_version"] = kReportFormatVersion;
    j["versions"] = {{"engine", kEngineVersion}, {"format", kReportFormatVersion}};
    j["cartan_type"] = r.cartan_type;
    j["rank"] = r.rank;
    j["weyl_order"] = r.weyl_order;
    j["gram_determinant"] = r.gram_determinant ? integer_json(*r.gram_determinant) : json(nullptr);
    j["basis"] = {{"size", r.weyl_order}, {"seeded", r.basis_seeded}, {"search_radius", r.basis_search_radius}};
    j["tor_table"] = rows_json(r.tor_table);
    j["ext_table"] = rows_json(r.ext_table);
    json e2 = json::array();
    for (const auto& row : r.e2_table)
        e2.push_back({{"p", row.p}, {"rank", row.rank}});
    j["e2_table"] = std::move(e2);
    j["k0_rank"] = r.k0_rank;
    j["k1_rank"] = r.k1_rank;
    json dets = json::array();
    for (const auto& d : r.exterior_degrees)
        dets.push_back({{"degree", d.degree}, {"rank", d.rank}, {"determinant", integer_json(d.determinant)}});
    j["exterior_basis"] = std::move(dets);
    j["exterior_certified"] = r.exterior_certified;
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass)
            e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    if (timings) {
        json t = json::object();
        for (const auto& [stage, ms] : r.timings_ms)
            t[stage] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string to_text(const KReport& r, bool timings)
{
    std::ostringstream s;
    s << "type " << r.cartan_type << "  rank " << r.rank << "  |W| " << r.weyl_order << "\n";
    s << "gram determinant " << (r.gram_determinant ? r.gram_determinant->str() : std::string("n/a")) << "\n\n";
    s << "degree  rank  torsion\n";
    for (const auto& row : r.tor_table) {
        char line[64];
        std::snprintf(line, sizeof line, "%6zu  %4zu  ", row.degree, row.rank);
        s << line << torsion_text(row.torsion) << "\n";
    }
    s << "\nK^0 rank " << r.k0_rank << "  K^1 rank " << r.k1_rank << "\n";
    s << "exterior algebra " << (r.exterior_certified ? "certified" : "NOT certified") << "\n\n";
    std::size_t width = 5;
    for (const auto& c : r.checks)
        width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        s << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.pass)
            s << std::string(width - c.name.size() + 2, ' ') << c.witness;
        s << "\n";
    }
    if (timings && !r.timings_ms.empty()) {
        s << "\n";
        for (const auto& [stage, ms] : r.timings_ms) {
            char line[64];
            std::snprintf(line, sizeof line, "%-10s %10.1f ms\n", stage.c_str(), ms);
            s << line;
        }
    }
    return s.str();
}

}  // namespace hodgkin::report
