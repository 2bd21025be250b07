#include "hyperlat/hyperlat.h"

#include <algorithm>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hyperlat/branch.hpp"
#include "hyperlat/builder.hpp"
#include "hyperlat/counting.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/map_io.hpp"

struct hl_map {
    hyperlat::MapFile file;
};

namespace {

using namespace hyperlat;

thread_local std::string last_error;

struct InvalidArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
hl_status guarded(F&& body)
{
    last_error.clear();
    try {
        body();
        return HL_OK;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return HL_INVALID_ARGUMENT;
    } catch (const ParseError& e) {
        last_error = e.what();
        return HL_PARSE_ERROR;
    } catch (const OverflowError& e) {
        last_error = e.what();
        return HL_OVERFLOW;
    } catch (const BudgetError& e) {
        last_error = e.what();
        return HL_BUDGET_EXCEEDED;
    } catch (const DomainError& e) {
        last_error = e.what();
        return HL_DOMAIN_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HL_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return HL_INTERNAL_ERROR;
    }
}

template <typename T>
void need(const T* p, const char* name)
{
    if (!p) throw InvalidArgument(std::string(name) + " is null");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

std::string unit_name(Family f, int k)
{
    if (k == 0) return "1";
    const char* g = f == Family::GaussDeg2 ? "i" : "d";
    return k == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(k);
}

struct Reduction {
    std::string canonical, matrix, unit;
    std::int64_t cells = 0;
    bool changed = false;
};

template <Ring R>
Reduction reduce_pair(Family f, std::string_view text)
{
    const auto z = parse_pair<R>(text);
    const auto cells = hermitian_cell_count(z);
    if (cells <= 0) throw DomainError("pair " + to_string(z) + " is not positively oriented");
    const auto red = pair_reduce(z);
    return {to_string(red.pair), red.matrix.to_string(), unit_name(f, red.unit_exponent), cells, !(red.pair == z)};
}

Reduction reduce_point(Family f, std::string_view text)
{
    switch (f) {
    case Family::EisDeg2: {
        const auto x = parse_lattice_int<Ring::Eisenstein>(text);
        const auto [rep, k] = canonical_unit_rep_with_witness(x);
        return {to_string(rep), UnimodularMatrix::identity().to_string(), unit_name(f, k), checked::mul(2, x.norm()),
                !(rep == x)};
    }
    case Family::EisDeg3: return reduce_pair<Ring::Eisenstein>(f, text);
    case Family::GaussDeg2: return reduce_pair<Ring::Gaussian>(f, text);
    }
    throw std::logic_error("unreachable");
}

} // namespace

extern "C" {

const char* hl_version(void) { return "1.0.0"; }

const char* hl_last_error(void) { return last_error.c_str(); }

const char* hl_status_name(hl_status status)
{
    switch (status) {
    case HL_OK: return "ok";
    case HL_DOMAIN_ERROR: return "domain error";
    case HL_PARSE_ERROR: return "parse error";
    case HL_OVERFLOW: return "overflow";
    case HL_BUDGET_EXCEEDED: return "budget exceeded";
    case HL_INVALID_ARGUMENT: return "invalid argument";
    case HL_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

void hl_string_free(char* s) { std::free(s); }

hl_status hl_enum_table(const char* problem, int m1, int n1, int n2, int min_fibers, const char* format, unsigned jobs,
                        char** out)
{
    return guarded([&] {
        need(problem, "problem");
        need(format, "format");
        need(out, "out");
        const Problem p = parse_problem(problem);
        const TableFormat fmt = parse_table_format(format);
        auto rows = m1 < 0 ? enum_all_blocks(p, std::max(1u, jobs)) : enum_branch(p, m1, n1, n2);
        if (min_fibers > 0) rows = fiber_filter(rows, min_fibers);
        *out = dup(emit_table(rows, p, fmt));
    });
}

hl_status hl_enum_check(const char* problem, const char* reference_csv, char** report, int* clean)
{
    return guarded([&] {
        need(problem, "problem");
        need(reference_csv, "reference_csv");
        need(report, "report");
        const Problem p = parse_problem(problem);
        const auto reference = parse_reference_table(reference_csv, p);
        const auto check = check_reference_table(reference, p);
        *report = dup(format_table_check(check, p));
        if (clean) *clean = check.clean() ? 1 : 0;
    });
}

hl_status hl_build(const char* family, const char* point, int subdivide_k, hl_map** out)
{
    return guarded([&] {
        need(family, "family");
        need(point, "point");
        need(out, "out");
        const Family f = parse_family(family);
        if (subdivide_k < 1) throw DomainError("subdivide: k must be at least 1");
        auto map = build_family(f, point);
        if (subdivide_k > 1) map = subdivide(map, subdivide_k);
        nlohmann::ordered_json meta;
        meta["family"] = family_name(f);
        meta["point"] = point;
        meta["subdivide"] = subdivide_k;
        meta["cells"] = map.face_count();
        *out = new hl_map{MapFile{family_face_size(f), std::move(map), meta.dump()}};
    });
}

hl_status hl_map_from_json(const char* text, hl_map** out)
{
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new hl_map{map_from_json(text)};
    });
}

hl_status hl_map_to_json(const hl_map* map, char** out)
{
    return guarded([&] {
        need(map, "map");
        need(out, "out");
        *out = dup(map_to_json(map->file));
    });
}

void hl_map_free(hl_map* map) { delete map; }

size_t hl_map_darts(const hl_map* map) { return map ? map->file.map.dart_count() : 0; }

int hl_map_face_size(const hl_map* map) { return map ? map->file.face_size : 0; }

hl_status hl_map_counts(const hl_map* map, size_t* vertices, size_t* edges, size_t* faces)
{
    return guarded([&] {
        need(map, "map");
        if (vertices) *vertices = map->file.map.vertex_count();
        if (edges) *edges = map->file.map.edge_count();
        if (faces) *faces = map->file.map.face_count();
    });
}

hl_status hl_map_subdivide(const hl_map* map, int k, hl_map** out)
{
    return guarded([&] {
        need(map, "map");
        need(out, "out");
        auto meta = nlohmann::ordered_json::parse(map->file.meta_json);
        auto fine = subdivide(map->file.map, k);
        const auto prior = meta.contains("subdivide") && meta["subdivide"].is_number_integer()
                               ? meta["subdivide"].get<std::int64_t>()
                               : 1;
        meta["subdivide"] = prior * k;
        meta["cells"] = fine.face_count();
        *out = new hl_map{MapFile{map->file.face_size, std::move(fine), meta.dump()}};
    });
}

hl_status hl_map_dual_dot(const hl_map* map, char** out)
{
    return guarded([&] {
        need(map, "map");
        need(out, "out");
        *out = dup(modular_graph_dot(dual_modular_graph(map->file.map)));
    });
}

hl_status hl_map_verify(const hl_map* map, int json, char** report, int* ok)
{
    return guarded([&] {
        need(map, "map");
        need(report, "report");
        const auto r = verify_map(map->file);
        *report = dup(json ? format_verify_json(r) : format_verify_text(r));
        if (ok) *ok = r.ok() ? 1 : 0;
    });
}

hl_status hl_map_isomorphic(const hl_map* a, const hl_map* b, int* result)
{
    return guarded([&] {
        need(a, "a");
        need(b, "b");
        need(result, "result");
        *result = is_isomorphic(a->file.map, b->file.map) ? 1 : 0;
    });
}

hl_status hl_reduce(const char* family, const char* point, int json, char** report)
{
    return guarded([&] {
        need(family, "family");
        need(point, "point");
        need(report, "report");
        const Family f = parse_family(family);
        const auto r = reduce_point(f, point);
        if (json) {
            nlohmann::ordered_json doc;
            doc["family"] = family_name(f);
            doc["input"] = point;
            doc["canonical"] = r.canonical;
            doc["matrix"] = r.matrix;
            doc["unit"] = r.unit;
            doc["cells"] = r.cells;
            doc["already_canonical"] = !r.changed;
            *report = dup(doc.dump(2) + "\n");
        } else {
            *report = dup("family: " + std::string(family_name(f)) + "\ncanonical: " + r.canonical +
                          "\nmatrix: " + r.matrix + "\nunit: " + r.unit + "\ncells: " + std::to_string(r.cells) +
                          "\nalready canonical: " + (r.changed ? "no" : "yes") + "\n");
        }
    });
}

hl_status hl_count_series(const char* family, int max_cells, int crosscheck_small, unsigned jobs, char** csv,
                          int* all_agree)
{
    return guarded([&] {
        need(family, "family");
        need(csv, "csv");
        if (max_cells < 0) throw InvalidArgument("max_cells must be nonnegative");
        const Family f = parse_family(family);
        const auto s = series(f, max_cells, static_cast<int>(std::max(1u, jobs)));
        if (crosscheck_small) {
            std::vector<CrosscheckResult> checks;
            bool agree = true;
            for (int n = 1; n <= std::min(max_cells, kSmallMapFaceLimit); ++n) {
                checks.push_back(crosscheck_detail(f, n));
                agree = agree && checks.back().ok();
            }
            *csv = dup(emit_series_csv(s, &checks));
            if (all_agree) *all_agree = agree ? 1 : 0;
        } else {
            *csv = dup(emit_series_csv(s));
            if (all_agree) *all_agree = 1;
        }
    });
}

int hl_count_budget(void) { return count_budget(); }

} // extern "C"
