#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hodgkin/cli.hpp"
#include "hodgkin/report.hpp"

using namespace hodgkin;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hodgkin");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& tag)
{
    fs::path d = fs::temp_directory_path() / ("hodgkin_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, ComputeA1Json)
{
    Result r = run({"compute", "--type", "A1", "--format", "json", "--no-cache"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["cartan_type"], "A1");
    EXPECT_EQ(j["k0_rank"], 1);
    EXPECT_EQ(j["k1_rank"], 1);
    EXPECT_EQ(j["weyl_order"], 2);
    EXPECT_EQ(j["gram_determinant"], -1);
    EXPECT_EQ(j["exterior_certified"], true);
    EXPECT_EQ(j["format_version"], report::kReportFormatVersion);
    EXPECT_TRUE(j.contains("timings_ms"));
    EXPECT_TRUE(j.contains("versions"));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"compute", "--type", "Z9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"compute", "--type", "E8", "--no-cache"}).code, cli::kExitResource);
    EXPECT_EQ(run({"compute"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"compute", "--type", "A1", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"compute", "--type", "A1", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"verify", "--type", "F4", "--no-cache", "--max-weyl-order", "1000"}).code, cli::kExitResource);
}

TEST(Cli, ReportInvariants)
{
    for (const char* t : {"A2", "B2", "G2", "A1xA1", "A3"}) {
        Result r = run({"compute", "--type", t, "--no-cache", "--no-timings"});
        ASSERT_EQ(r.code, 0) << t << r.err;
        auto j = nlohmann::json::parse(r.out);
        std::size_t total = 0;
        for (const auto& row : j["tor_table"]) {
            total += row["rank"].get<std::size_t>();
            EXPECT_TRUE(row["torsion"].empty());
        }
        const std::size_t n = j["rank"];
        EXPECT_EQ(j["k0_rank"].get<std::size_t>() + j["k1_rank"].get<std::size_t>(), total) << t;
        EXPECT_EQ(j["k0_rank"].get<std::size_t>(), std::size_t{1} << (n - 1)) << t;
        EXPECT_EQ(j["exterior_certified"], true);
        for (const auto& d : j["exterior_basis"])
            EXPECT_TRUE(d["determinant"] == 1 || d["determinant"] == -1);
        // E_2^{p,0} = rank Tor_{n-p}.
        for (const auto& row : j["e2_table"])
            EXPECT_EQ(row["rank"], j["tor_table"][n - row["p"].get<std::size_t>()]["rank"]);
        EXPECT_FALSE(j.contains("timings_ms"));
    }
}

TEST(Cli, DeterministicJson)
{
    Result a = run({"compute", "--type", "B2", "--no-cache", "--no-timings", "--threads", "1"});
    Result b = run({"compute", "--type", "B2", "--no-cache", "--no-timings", "--threads", "3"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, WarmCacheMatchesColdRun)
{
    const fs::path dir = temp_dir("cache");
    const std::string d = dir.string();
    Result cold = run({"compute", "--type", "G2", "--no-timings", "--cache-dir", d});
    ASSERT_EQ(cold.code, 0) << cold.err;
    ASSERT_TRUE(fs::exists(dir / "G2.json"));
    Result warm = run({"compute", "--type", "G2", "--no-timings", "--cache-dir", d});
    EXPECT_EQ(warm.code, 0);
    EXPECT_EQ(warm.out, cold.out);
    Result warm_fast = run({"compute", "--type", "G2", "--no-timings", "--cache-dir", d, "--no-verify"});
    EXPECT_EQ(warm_fast.code, 0);

    // A corrupted entry is ignored and rewritten.
    {
        std::ofstream f(dir / "G2.json", std::ios::trunc);
        f << "{\"format_version\": 1, \"checksum\": \"0\"}";
    }
    Result again = run({"compute", "--type", "G2", "--no-timings", "--cache-dir", d});
    EXPECT_EQ(again.code, 0);
    EXPECT_EQ(again.out, cold.out);
    EXPECT_NE(slurp(dir / "G2.json").find("mult_matrices"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, CacheDirFromEnvironment)
{
    const fs::path dir = temp_dir("env");
    ::setenv("HODGKIN_CACHE_DIR", dir.string().c_str(), 1);
    Result r = run({"compute", "--type", "A2", "--no-timings"});
    ::unsetenv("HODGKIN_CACHE_DIR");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(dir / "A2.json"));
    fs::remove_all(dir);
}

TEST(Cli, OutFileAndTextFormat)
{
    const fs::path dir = temp_dir("out");
    const fs::path file = dir / "report.txt";
    Result r = run({"compute", "--type", "A2", "--format", "text", "--out", file.string(), "--no-cache"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    const std::string text = slurp(file);
    EXPECT_NE(text.find("K^0 rank 2  K^1 rank 2"), std::string::npos);
    EXPECT_NE(text.find("exterior algebra certified"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, VerifyA1IncludesGoldenGram)
{
    Result r = run({"verify", "--type", "A1", "--no-cache"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS  a1_gram "), std::string::npos);
    EXPECT_NE(r.out.find("PASS  a1_gram_determinant"), std::string::npos);
    EXPECT_NE(r.out.find("PASS  a1_multiplication_matrix"), std::string::npos);
}

TEST(Cli, VerifyB2TorRanks)
{
    Result r = run({"verify", "--type", "B2", "--no-cache"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Tor ranks: 1 2 1  torsion: none"), std::string::npos);
}

TEST(Cli, VerifyA2FullAllPass)
{
    Result r = run({"verify", "--type", "A2", "--level", "full", "--no-cache"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("oracle_characteristic_polynomials"), std::string::npos);
    EXPECT_NE(r.out.find("smith_audit"), std::string::npos);
    EXPECT_NE(r.out.find("demazure_idempotent"), std::string::npos);
}

TEST(Cli, ListTypes)
{
    Result r = run({"list-types"});
    EXPECT_EQ(r.code, 0);
    for (const char* s : {"A ", "B ", "C ", "D ", "E ", "F ", "G ", "E7", "E8", "250000", "HODGKIN_CACHE_DIR",
                          "--cache-dir"})
        EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Report, FailedCheckIsNotSuccess)
{
    report::KReport r;
    r.checks = {{"a", true, ""}, {"b", false, "witness"}};
    EXPECT_FALSE(r.all_pass());
    const auto j = nlohmann::json::parse(report::to_json(r));
    EXPECT_EQ(j["checks"][1]["witness"], "witness");
    EXPECT_FALSE(j["checks"][0].contains("witness"));
}
