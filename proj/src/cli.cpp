#include "hodgkin/cli.hpp"

#include <fstream>
#include <iomanip>
#include <string>

#include <CLI11.hpp>

#include "hodgkin/cache.hpp"
#include "hodgkin/pipeline.hpp"
#include "hodgkin/report.hpp"
#include "hodgkin/verify.hpp"

namespace hodgkin::cli {

namespace {

struct CommonArgs {
    std::string type;
    std::string cache_dir;
    bool no_cache = false;
    std::uint64_t max_weyl_order = cartan::kDefaultWeylOrderGuard;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a)
{
    cmd->add_option("--type", a.type, "Cartan type, e.g. A2, B3, G2, A1xA1")->required();
    cmd->add_option("--cache-dir", a.cache_dir, "Cache directory for module data");
    cmd->add_flag("--no-cache", a.no_cache, "Do not read or write the cache");
    cmd->add_option("--max-weyl-order", a.max_weyl_order, "Refuse types whose Weyl group is larger")
        ->capture_default_str();
    cmd->add_option("--threads", a.threads, "Worker threads (0 = machine parallelism)")->capture_default_str();
}

pipeline::PipelineOptions pipeline_options(const CommonArgs& a)
{
    pipeline::PipelineOptions o;
    o.max_weyl_order = a.max_weyl_order;
    o.threads = a.threads;
    if (!a.no_cache)
        o.cache_dir = cache::resolve_dir(a.cache_dir);
    return o;
}

int list_types(std::ostream& out)
{
    out << "Cartan types: a factor is a family letter and a rank; factors are joined by 'x' (e.g. B2xA1).\n"
        << "Total rank at most " << kMaxRank << ".\n\n"
        << "family  ranks          |W|\n"
        << "A       n >= 1         (n+1)!\n"
        << "B       n >= 2         2^n n!\n"
        << "C       n >= 2         2^n n!\n"
        << "D       n >= 3         2^(n-1) n!\n"
        << "E       n = 6, 7, 8    51840, 2903040, 696729600\n"
        << "F       n = 4          1152\n"
        << "G       n = 2          12\n\n"
        << "Default --max-weyl-order: " << cartan::kDefaultWeylOrderGuard << ".\n"
        << "Guard-gated at the default: E7, E8 (and any type with |W| above the guard).\n"
        << "The module has rank |W|, so cost grows quickly; types up to |W| of a few hundred run in seconds.\n\n"
        << "Cache directory resolution order:\n";
    int k = 1;
    for (const auto& step : cache::resolution_order())
        out << "  " << k++ << ". " << step << "\n";
    return kExitOk;
}

int compute(const CommonArgs& a, const std::string& format, const std::string& out_file, bool no_verify,
            bool no_timings, std::ostream& out, std::ostream& err)
{
    pipeline::PipelineOptions o = pipeline_options(a);
    o.verify = !no_verify;
    auto p = pipeline::run_pipeline(a.type, o);
    const report::KReport r = report::assemble_report(*p);
    const std::string text = format == "text" ? report::to_text(r, !no_timings) : report::to_json(r, !no_timings);
    if (out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(out_file, std::ios::binary | std::ios::trunc);
        if (!(f << text)) {
            err << "error: cannot write " << out_file << "\n";
            return kExitUsage;
        }
    }
    if (!r.all_pass()) {
        for (const auto& c : r.checks)
            if (!c.pass)
                err << "certification failed: " << c.name << ": " << c.witness << "\n";
        return kExitCertification;
    }
    return kExitOk;
}

int verify_cmd(const CommonArgs& a, const std::string& level, std::ostream& out, std::ostream& err)
{
    const auto lv = level == "full" ? verify::Level::Full : verify::Level::Fast;
    verify::VerifyResult v = verify::run_verify(a.type, lv, pipeline_options(a));
    const auto& p = *v.pipeline;
    out << "type " << p.type.to_string() << "  level " << level << "\n";
    if (p.tor) {
        const auto& h = p.tor->homology();
        out << "Tor ranks:";
        for (std::size_t b : h.betti())
            out << ' ' << b;
        out << "  torsion: " << (h.torsion_free() ? "none" : "present") << "\n";
    }
    std::size_t width = 4;
    for (const auto& c : v.checks)
        width = std::max(width, c.name.size());
    std::size_t failed = 0;
    for (const auto& c : v.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name;
        if (!c.pass) {
            out << "  " << c.witness;
            ++failed;
        }
        out << "\n";
    }
    out << v.checks.size() - failed << "/" << v.checks.size() << " checks passed\n";
    if (failed) {
        err << failed << " check(s) failed\n";
        return kExitCertification;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact K-theory of compact Lie groups via Koszul complexes over representation rings"};
    app.name("hodgkin");
    app.require_subcommand(1);

    CommonArgs compute_args;
    std::string format = "json", out_file;
    bool no_verify = false, no_timings = false;
    auto* compute_cmd = app.add_subcommand("compute", "Run the pipeline for one type and emit a report");
    add_common(compute_cmd, compute_args);
    compute_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    compute_cmd->add_option("--out", out_file, "Write the report to FILE instead of stdout");
    compute_cmd->add_flag("--no-verify", no_verify, "Skip the redundant module checks");
    compute_cmd->add_flag("--no-timings", no_timings, "Omit timings (byte-identical reports)");

    CommonArgs verify_args;
    std::string level = "fast";
    auto* verify_sub = app.add_subcommand("verify", "Run certifications and print a pass/fail table");
    add_common(verify_sub, verify_args);
    verify_sub->add_option("--level", level, "fast: type-level checks; full: adds property suites")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    auto* list_cmd = app.add_subcommand("list-types", "Show supported Cartan types and defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (list_cmd->parsed())
            return list_types(out);
        if (compute_cmd->parsed())
            return compute(compute_args, format, out_file, no_verify, no_timings, out, err);
        return verify_cmd(verify_args, level, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        err << "certification failed: " << e.what() << "\n";
        return kExitCertification;
    }
}

}  // namespace hodgkin::cli
