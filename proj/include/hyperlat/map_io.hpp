#pragma once

// hyperlat-map/1 files, DOT export of dual modular graphs and the verify report.
//
// {"format":"hyperlat-map/1","face_size":3,"darts":N,"alpha":[...],"sigma":[...],"meta":{...}}
//
// Darts are 0-based; alpha and sigma are full permutation arrays and faces are
// the cycles of phi = alpha o sigma.

#include <optional>
#include <string>
#include <string_view>

#include "hyperlat/surface.hpp"

namespace hyperlat {

inline constexpr std::string_view kMapFormat = "hyperlat-map/1";

struct MapFile {
    int face_size = 3;
    CombinatorialMap map;
    std::string meta_json = "{}"; ///< the "meta" object, compact
};

/// Compact single-line JSON followed by a newline. meta_json must be a JSON object.
std::string map_to_json(const CombinatorialMap& map, int face_size, std::string_view meta_json = "{}");
std::string map_to_json(const MapFile& file);

/// Throws ParseError naming the line/column or the offending field.
MapFile map_from_json(std::string_view text);

/// Bipartite DOT graph: b<i> per r-cycle, w<j> per s-cycle, one edge per dart.
std::string modular_graph_dot(const ModularGraph& g);

struct VerifyReport {
    int face_size = 3;
    std::size_t darts = 0, vertices = 0, edges = 0, faces = 0;
    bool connected = false;
    int euler = 0;
    bool sphere = false;
    bool uniform = false; ///< every face has face_size sides
    std::optional<CurvatureProfile> profile;
    std::optional<int> curvature_sixths;
    bool gauss_bonnet = false;
    bool nonneg = false;
    std::optional<int> positive_vertices;
    std::optional<int> genus;
    std::optional<CoverStats> dual;
    std::optional<bool> dual_degenerate;

    /// A connected, non-negatively curved sphere passing Gauss-Bonnet.
    bool ok() const { return connected && sphere && uniform && gauss_bonnet && nonneg; }
};

VerifyReport verify_map(const MapFile& file);
std::string format_verify_text(const VerifyReport& r);
std::string format_verify_json(const VerifyReport& r);

} // namespace hyperlat
