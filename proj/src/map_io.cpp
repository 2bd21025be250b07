#include "hyperlat/map_io.hpp"

#include <json.hpp>

#include "hyperlat/errors.hpp"

namespace hyperlat {

using ojson = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw ParseError("field '" + field + "': " + what);
}

const ojson& require(const ojson& doc, const char* field)
{
    const auto it = doc.find(field);
    if (it == doc.end()) field_error(field, "missing");
    return *it;
}

Permutation read_perm(const ojson& doc, const char* field, std::size_t darts)
{
    const auto& arr = require(doc, field);
    if (!arr.is_array()) field_error(field, "expected an array");
    if (arr.size() != darts)
        field_error(field, "has " + std::to_string(arr.size()) + " entries but darts is " + std::to_string(darts));
    Permutation out(darts);
    std::vector<bool> seen(darts, false);
    for (std::size_t i = 0; i < darts; ++i) {
        const auto& v = arr[i];
        if (!v.is_number_integer()) field_error(field, "entry " + std::to_string(i) + " is not an integer");
        const auto d = v.get<std::int64_t>();
        if (d < 0 || static_cast<std::size_t>(d) >= darts)
            field_error(field, "entry " + std::to_string(i) + " = " + std::to_string(d) + " is out of range");
        if (seen[d]) field_error(field, "entry " + std::to_string(i) + " repeats dart " + std::to_string(d));
        seen[d] = true;
        out[i] = static_cast<Dart>(d);
    }
    return out;
}

} // namespace

std::string map_to_json(const CombinatorialMap& map, int face_size, std::string_view meta_json)
{
    ojson doc;
    doc["format"] = kMapFormat;
    doc["face_size"] = face_size;
    doc["darts"] = map.dart_count();
    doc["alpha"] = map.alpha();
    doc["sigma"] = map.sigma();
    ojson meta = ojson::parse(meta_json.empty() ? std::string_view("{}") : meta_json);
    if (!meta.is_object()) throw DomainError("meta must be a JSON object");
    doc["meta"] = std::move(meta);
    return doc.dump() + "\n";
}

std::string map_to_json(const MapFile& file) { return map_to_json(file.map, file.face_size, file.meta_json); }

MapFile map_from_json(std::string_view text)
{
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object()) throw ParseError("top level must be a JSON object");

    const auto& format = require(doc, "format");
    if (!format.is_string() || format.get<std::string>() != kMapFormat)
        field_error("format", "expected \"" + std::string(kMapFormat) + "\"");

    const auto& fs = require(doc, "face_size");
    if (!fs.is_number_integer() || (fs.get<std::int64_t>() != 3 && fs.get<std::int64_t>() != 4))
        field_error("face_size", "expected 3 or 4");

    const auto& darts = require(doc, "darts");
    if (!darts.is_number_integer() || darts.get<std::int64_t>() < 0 || darts.get<std::int64_t>() > (1 << 26))
        field_error("darts", "expected a nonnegative integer");
    const auto n = static_cast<std::size_t>(darts.get<std::int64_t>());

    MapFile out;
    out.face_size = static_cast<int>(fs.get<std::int64_t>());
    auto alpha = read_perm(doc, "alpha", n);
    auto sigma = read_perm(doc, "sigma", n);
    try {
        out.map = CombinatorialMap(std::move(alpha), std::move(sigma));
    } catch (const DomainError& e) {
        field_error("alpha", e.what());
    }
    if (const auto it = doc.find("meta"); it != doc.end()) {
        if (!it->is_object()) field_error("meta", "expected an object");
        out.meta_json = it->dump();
    }
    return out;
}

std::string modular_graph_dot(const ModularGraph& g)
{
    const auto black = cycles_of(g.r());
    const auto white = cycles_of(g.s());
    std::vector<std::size_t> black_of(g.dart_count()), white_of(g.dart_count());
    for (std::size_t i = 0; i < black.size(); ++i)
        for (Dart d : black[i]) black_of[d] = i;
    for (std::size_t j = 0; j < white.size(); ++j)
        for (Dart d : white[j]) white_of[d] = j;

    std::string out = "graph modular {\n";
    for (std::size_t i = 0; i < black.size(); ++i) out += "  b" + std::to_string(i) + " [shape=point];\n";
    for (std::size_t j = 0; j < white.size(); ++j) out += "  w" + std::to_string(j) + " [shape=circle];\n";
    for (std::size_t d = 0; d < g.dart_count(); ++d)
        out += "  b" + std::to_string(black_of[d]) + " -- w" + std::to_string(white_of[d]) + ";\n";
    out += "}\n";
    return out;
}

VerifyReport verify_map(const MapFile& file)
{
    const auto& m = file.map;
    VerifyReport r;
    r.face_size = file.face_size;
    r.darts = m.dart_count();
    r.vertices = m.vertex_count();
    r.edges = m.edge_count();
    r.faces = m.face_count();
    r.connected = m.dart_count() > 0 && m.is_connected();
    r.euler = euler_characteristic(m);
    r.sphere = r.connected && r.euler == 2;
    r.uniform = m.dart_count() > 0 && m.uniform_face_size() == file.face_size;
    if (r.connected) r.genus = map_genus(m);
    if (r.uniform) {
        r.profile = curvature_profile(m, file.face_size);
        r.curvature_sixths = total_curvature_sixths(m, file.face_size);
        r.gauss_bonnet = gauss_bonnet_check(m, file.face_size);
        r.nonneg = is_nonneg_curved(m, file.face_size);
        if (r.sphere && r.nonneg) r.positive_vertices = positive_vertex_count(m, file.face_size);
        if (file.face_size == 3 && r.connected) {
            const auto g = dual_modular_graph(m);
            r.dual = cover_stats(g);
            r.dual_degenerate = g.is_degenerate();
        }
    }
    return r;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string angle_text(int sixths) { return Angle{sixths}.to_string(); }

} // namespace

std::string format_verify_text(const VerifyReport& r)
{
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) { out += key + ": " + value + "\n"; };
    line("darts", std::to_string(r.darts));
    line("vertices", std::to_string(r.vertices));
    line("edges", std::to_string(r.edges));
    line("faces", std::to_string(r.faces));
    line("connected", yes_no(r.connected));
    line("euler characteristic", std::to_string(r.euler) + (r.sphere ? " (sphere)" : " (not a sphere)"));
    line("face size", std::to_string(r.face_size) + (r.uniform ? " (uniform)" : " (not uniform)"));
    if (r.profile) {
        line("curvature profile", r.profile->to_string());
        for (const auto& e : r.profile->entries)
            out += "  degree " + std::to_string(e.degree) + " x" + std::to_string(e.count) + ": kappa=" +
                   e.kappa.to_string() + " theta=" + e.theta.to_string() + "\n";
    }
    if (r.curvature_sixths)
        line("gauss-bonnet", std::string(r.gauss_bonnet ? "pass" : "fail") + " (total curvature " +
                                 angle_text(*r.curvature_sixths) + ", 2pi*chi = " + angle_text(12 * r.euler) + ")");
    else
        line("gauss-bonnet", "fail (faces not uniform)");
    line("non-negatively curved", yes_no(r.nonneg));
    if (r.positive_vertices) line("positive curvature vertices", std::to_string(*r.positive_vertices));
    if (r.genus) line("genus", std::to_string(*r.genus));
    if (r.dual) {
        line("dual modular graph", "degree " + std::to_string(r.dual->degree) + ", " + std::to_string(r.dual->black) +
                                       " black, " + std::to_string(r.dual->white) + " white, " +
                                       std::to_string(r.dual->cusps) + " cusps, genus " + std::to_string(r.dual->genus) +
                                       (r.dual_degenerate.value_or(false) ? ", degenerate" : ""));
    }
    line("status", r.ok() ? "OK" : "FAIL");
    return out;
}

std::string format_verify_json(const VerifyReport& r)
{
    ojson doc;
    doc["darts"] = r.darts;
    doc["vertices"] = r.vertices;
    doc["edges"] = r.edges;
    doc["faces"] = r.faces;
    doc["connected"] = r.connected;
    doc["euler_characteristic"] = r.euler;
    doc["sphere"] = r.sphere;
    doc["face_size"] = r.face_size;
    doc["uniform"] = r.uniform;
    if (r.profile) {
        ojson prof = ojson::array();
        for (const auto& e : r.profile->entries)
            prof.push_back({{"degree", e.degree}, {"count", e.count}, {"kappa_sixths", e.kappa.sixths},
                            {"theta_sixths", e.theta.sixths}});
        doc["curvature_profile"] = std::move(prof);
        doc["total_curvature_sixths"] = *r.curvature_sixths;
    }
    doc["gauss_bonnet"] = r.gauss_bonnet;
    doc["nonneg_curved"] = r.nonneg;
    if (r.positive_vertices) doc["positive_vertices"] = *r.positive_vertices;
    if (r.genus) doc["genus"] = *r.genus;
    if (r.dual)
        doc["dual"] = {{"degree", r.dual->degree}, {"black", r.dual->black}, {"white", r.dual->white},
                       {"cusps", r.dual->cusps}, {"genus", r.dual->genus},
                       {"degenerate", r.dual_degenerate.value_or(false)}};
    doc["ok"] = r.ok();
    return doc.dump(2) + "\n";
}

} // namespace hyperlat
