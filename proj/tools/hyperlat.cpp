// Command-line front end. Talks to the library only through hyperlat.h.
//
// Exit codes: 0 success, 1 domain error (or a failed check), 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include <CLI11.hpp>

#include "hyperlat/hyperlat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(hl_status s)
{
    switch (s) {
    case HL_OK: return kExitOk;
    case HL_PARSE_ERROR:
    case HL_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
    }
}

void check(hl_status s)
{
    if (s != HL_OK) throw Failure{exit_code_for(s), std::string(hl_status_name(s)) + ": " + hl_last_error()};
}

struct StringDeleter {
    void operator()(char* p) const { hl_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MapDeleter {
    void operator()(hl_map* p) const { hl_map_free(p); }
};
using OwnedMap = std::unique_ptr<hl_map, MapDeleter>;

template <typename F>
std::string take(F&& call)
{
    char* raw = nullptr;
    check(call(&raw));
    OwnedString owned(raw);
    return std::string(raw ? raw : "");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes next to the target, then renames over it.
void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Failure{kExitDomain, "cannot write " + path};
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Failure{kExitDomain, "cannot write " + path};
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Failure{kExitDomain, "cannot write " + path};
    }
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) std::cout << content << std::flush;
    else write_atomic(out_path, content);
}

unsigned default_jobs()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

OwnedMap load_map(const std::string& path)
{
    const std::string text = read_file(path);
    hl_map* raw = nullptr;
    const hl_status s = hl_map_from_json(text.c_str(), &raw);
    if (s != HL_OK) throw Failure{exit_code_for(s), path + ": " + hl_last_error()};
    return OwnedMap(raw);
}

void save_map(const hl_map* map, const std::string& out, const std::string& dot)
{
    emit(out, take([&](char** o) { return hl_map_to_json(map, o); }));
    if (!dot.empty()) write_atomic(dot, take([&](char** o) { return hl_map_dual_dot(map, o); }));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hyperlat: non-negatively curved sphere triangulations from lattices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hl_version()));

    unsigned jobs = default_jobs();
    std::string out_path;

    // enum
    auto* en = app.add_subcommand("enum", "Enumerate Riemann-Hurwitz branch data");
    std::string problem;
    std::optional<int> m1, n1, n2;
    int min_fibers = 0;
    std::string format = "csv";
    std::string check_path;
    en->add_option("--problem", problem, "E, G, Eprime or Gprime")->required();
    en->add_option("--m1", m1, "Unramified points over 0");
    en->add_option("--n1", n1, "Unramified points over 1");
    en->add_option("--n2", n2, "Index-2 points over 1 (Gprime)");
    en->add_option("--min-fibers", min_fibers, "Keep rows with at least N points over infinity");
    en->add_option("--format", format, "csv or markdown");
    en->add_option("--out", out_path, "Output file (default stdout)");
    en->add_option("--jobs", jobs, "Worker threads");
    en->add_option("--check", check_path, "Compare a published table (CSV) with the enumeration");

    // build
    auto* bu = app.add_subcommand("build", "Build a sphere map from a lattice point");
    std::string family, point, dot_path;
    int sub_k = 1;
    bu->add_option("--family", family, "eis-deg2, eis-deg3 or gauss-deg2")->required();
    bu->add_option("--point", point, "a+bd, z1;z2 or a+bi;c+di")->required();
    bu->add_option("--subdivide", sub_k, "Subdivide every face K times");
    bu->add_option("--out", out_path, "Output map JSON")->required();
    bu->add_option("--dot", dot_path, "Dual modular graph DOT file");

    // verify
    auto* ve = app.add_subcommand("verify", "Check curvature, Gauss-Bonnet and duality invariants of a map file");
    std::string in_path;
    bool as_json = false;
    ve->add_option("path", in_path, "hyperlat-map/1 JSON file")->required();
    ve->add_flag("--json", as_json, "Machine-readable report");

    // reduce
    auto* re = app.add_subcommand("reduce", "Canonical orbit representative of a lattice point");
    re->add_option("--family", family, "eis-deg2, eis-deg3 or gauss-deg2")->required();
    re->add_option("--point", point, "Lattice point")->required();
    re->add_flag("--json", as_json, "Machine-readable output");

    // count
    auto* co = app.add_subcommand("count", "Isomer counts per cell count");
    int max_cells = 0;
    bool crosscheck = false;
    std::string count_format = "csv";
    co->add_option("--family", family, "eis-deg2, eis-deg3 or gauss-deg2")->required();
    co->add_option("--max-cells", max_cells, "Largest cell count")->required();
    co->add_flag("--crosscheck", crosscheck, "Compare with exhaustive small-map enumeration (n <= 8)");
    co->add_option("--format", count_format, "csv")->check(CLI::IsMember({"csv"}));
    co->add_option("--out", out_path, "Output file (default stdout)");
    co->add_option("--jobs", jobs, "Worker threads");

    // subdivide
    auto* su = app.add_subcommand("subdivide", "Subdivide every face of a map file");
    int k = 2;
    su->add_option("path", in_path, "hyperlat-map/1 JSON file")->required();
    su->add_option("--k", k, "Subdivision factor")->required();
    su->add_option("--out", out_path, "Output map JSON")->required();
    su->add_option("--dot", dot_path, "Dual modular graph DOT file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*en) {
            if (!check_path.empty()) {
                const std::string csv = read_file(check_path);
                int clean = 0;
                const std::string report =
                    take([&](char** o) { return hl_enum_check(problem.c_str(), csv.c_str(), o, &clean); });
                emit(out_path, report);
                return clean ? kExitOk : kExitDomain;
            }
            const bool pooled = !m1 && !n1 && !n2;
            const int bm1 = pooled ? -1 : m1.value_or(0);
            emit(out_path, take([&](char** o) {
                     return hl_enum_table(problem.c_str(), bm1, n1.value_or(0), n2.value_or(0), min_fibers,
                                          format.c_str(), jobs, o);
                 }));
        } else if (*bu) {
            hl_map* raw = nullptr;
            check(hl_build(family.c_str(), point.c_str(), sub_k, &raw));
            OwnedMap map(raw);
            save_map(map.get(), out_path, dot_path);
        } else if (*ve) {
            const auto map = load_map(in_path);
            int ok = 0;
            std::cout << take([&](char** o) { return hl_map_verify(map.get(), as_json ? 1 : 0, o, &ok); });
            return ok ? kExitOk : kExitDomain;
        } else if (*re) {
            std::cout << take([&](char** o) { return hl_reduce(family.c_str(), point.c_str(), as_json ? 1 : 0, o); });
        } else if (*co) {
            int agree = 1;
            emit(out_path, take([&](char** o) {
                     return hl_count_series(family.c_str(), max_cells, crosscheck ? 1 : 0, jobs, o, &agree);
                 }));
            if (!agree) {
                std::cerr << "crosscheck failed\n";
                return kExitDomain;
            }
        } else if (*su) {
            const auto map = load_map(in_path);
            hl_map* raw = nullptr;
            check(hl_map_subdivide(map.get(), k, &raw));
            OwnedMap fine(raw);
            save_map(fine.get(), out_path, dot_path);
        }
    } catch (const Failure& f) {
        std::cerr << "hyperlat: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "hyperlat: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
