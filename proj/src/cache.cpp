#include "hodgkin/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hodgkin::cache {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Integer integer_from(const json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

json matrix_json(const IntMatrix& a)
{
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(integer_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from(const json& j, std::size_t n)
{
    if (!j.is_array() || j.size() != n)
        throw std::invalid_argument("matrix has the wrong number of rows");
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw std::invalid_argument("matrix row has the wrong length");
        for (std::size_t k = 0; k < n; ++k)
            a(i, k) = integer_from(j[i][k]);
    }
    return a;
}

json weight_json(const Weight& w)
{
    json a = json::array();
    for (int i = 0; i < w.size(); ++i)
        a.push_back(w[i]);
    return a;
}

json small_matrix_json(const cartan::SmallMatrix& w)
{
    return json(w.entries());
}

json payload(const cartan::CartanType& type, const cartan::WeylGroup& weyl, const flagk::ModuleData& data)
{
    json p;
    p["format_version"] = kCacheFormatVersion;
    p["cartan_type"] = type.to_string();
    json elements = json::array();
    for (const auto& w : weyl.elements)
        elements.push_back(small_matrix_json(w));
    p["weyl_matrices"] = std::move(elements);
    p["longest_word"] = weyl.longest_word;
    json basis = json::array();
    for (const auto& w : data.basis_weights)
        basis.push_back(weight_json(w));
    p["basis_weights"] = std::move(basis);
    p["gram"] = matrix_json(data.gram);
    json mult = json::array();
    for (const auto& m : data.mult_matrices)
        mult.push_back(matrix_json(m));
    p["mult_matrices"] = std::move(mult);
    p["seeded"] = data.seeded;
    p["radius"] = data.radius;
    return p;
}

std::string checksum_hex(const json& p)
{
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << fnv1a(p.dump());
    return s.str();
}

bool fail(std::string* reason, const std::string& why)
{
    if (reason)
        *reason = why;
    return false;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string resolve_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("HODGKIN_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return (fs::path(xdg) / "hodgkin").string();
    if (const char* home = std::getenv("HOME"); home && *home)
        return (fs::path(home) / ".cache" / "hodgkin").string();
    return {};
}

std::vector<std::string> resolution_order()
{
    return {"--cache-dir DIR", "$HODGKIN_CACHE_DIR", "$XDG_CACHE_HOME/hodgkin", "$HOME/.cache/hodgkin"};
}

std::string serialize(const cartan::CartanType& type, const cartan::WeylGroup& weyl, const flagk::ModuleData& data)
{
    json p = payload(type, weyl, data);
    json entry = p;
    entry["checksum"] = checksum_hex(p);
    return entry.dump() + "\n";
}

std::optional<flagk::ModuleData> parse(const std::string& text, const cartan::CartanType& type,
                                       const cartan::WeylGroup& weyl, std::string* reason)
{
    json entry = json::parse(text, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) {
        fail(reason, "not a JSON object");
        return std::nullopt;
    }
    if (!entry.contains("checksum") || !entry["checksum"].is_string()) {
        fail(reason, "missing checksum");
        return std::nullopt;
    }
    const std::string stored = entry["checksum"].get<std::string>();
    entry.erase("checksum");
    if (checksum_hex(entry) != stored) {
        fail(reason, "checksum mismatch");
        return std::nullopt;
    }
    try {
        if (entry.at("format_version").get<int>() != kCacheFormatVersion) {
            fail(reason, "format version mismatch");
            return std::nullopt;
        }
        if (entry.at("cartan_type").get<std::string>() != type.to_string()) {
            fail(reason, "entry is for another type");
            return std::nullopt;
        }
        const json& elements = entry.at("weyl_matrices");
        bool same = elements.size() == weyl.elements.size();
        for (std::size_t k = 0; same && k < elements.size(); ++k)
            same = elements[k].get<std::vector<int>>() == weyl.elements[k].entries();
        if (!same || entry.at("longest_word").get<std::vector<int>>() != weyl.longest_word) {
            fail(reason, "Weyl group data differs");
            return std::nullopt;
        }
        const int n = type.rank();
        const std::size_t m = weyl.order();
        flagk::ModuleData data;
        for (const auto& w : entry.at("basis_weights")) {
            auto v = w.get<std::vector<int>>();
            if (v.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("basis weight of the wrong rank");
            Weight x(n);
            for (int i = 0; i < n; ++i)
                x[i] = v[static_cast<std::size_t>(i)];
            data.basis_weights.push_back(x);
        }
        if (data.basis_weights.size() != m)
            throw std::invalid_argument("basis has the wrong size");
        data.gram = matrix_from(entry.at("gram"), m);
        const json& mult = entry.at("mult_matrices");
        if (mult.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("wrong number of multiplication matrices");
        for (const auto& mj : mult)
            data.mult_matrices.push_back(matrix_from(mj, m));
        data.seeded = entry.at("seeded").get<std::size_t>();
        data.radius = entry.at("radius").get<int>();
        return data;
    } catch (const std::exception& e) {
        fail(reason, std::string("malformed entry: ") + e.what());
        return std::nullopt;
    }
}

std::string entry_path(const std::string& dir, const cartan::CartanType& type)
{
    return (fs::path(dir) / (type.to_string() + ".json")).string();
}

std::optional<flagk::ModuleData> load(const std::string& dir, const cartan::CartanType& type,
                                      const cartan::WeylGroup& weyl, std::string* reason)
{
    std::ifstream in(entry_path(dir, type), std::ios::binary);
    if (!in) {
        fail(reason, "no entry");
        return std::nullopt;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str(), type, weyl, reason);
}

bool store(const std::string& dir, const cartan::CartanType& type, const cartan::WeylGroup& weyl,
           const flagk::ModuleData& data)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        return false;
    const std::string path = entry_path(dir, type);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return false;
        out << serialize(type, weyl, data);
        if (!out)
            return false;
    }
    fs::rename(tmp, path, ec);
    return !ec;
}

}  // namespace hodgkin::cache
