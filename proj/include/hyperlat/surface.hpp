#pragma once

// Oriented surfaces as combinatorial maps on darts 0..n-1:
//   alpha  fixed-point-free involution (the two halves of an edge),
//   sigma  counterclockwise rotation of darts around their vertex,
//   phi    = alpha o sigma, the face permutation. A dart belongs to the face on
//          its left; phi visits that face's darts clockwise.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperlat {

using Dart = std::int32_t;
using Permutation = std::vector<Dart>;

/// Cycles of a permutation, each starting at its smallest dart, ordered by that dart.
std::vector<std::vector<Dart>> cycles_of(std::span<const Dart> perm);
Permutation inverse_of(std::span<const Dart> perm);
/// (f o g)(x) = f(g(x))
Permutation compose(std::span<const Dart> f, std::span<const Dart> g);

class CombinatorialMap {
public:
    CombinatorialMap() = default;
    /// Throws DomainError unless alpha and sigma are permutations of the same
    /// size and alpha is a fixed-point-free involution. Connectivity is not required.
    CombinatorialMap(Permutation alpha, Permutation sigma);

    std::size_t dart_count() const { return alpha_.size(); }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart phi(Dart d) const { return alpha_[sigma_[d]]; }

    const Permutation& alpha() const { return alpha_; }
    const Permutation& sigma() const { return sigma_; }
    Permutation phi() const { return compose(alpha_, sigma_); }

    std::vector<std::vector<Dart>> vertices() const { return cycles_of(sigma_); }
    std::vector<std::vector<Dart>> faces() const { return cycles_of(phi()); }
    std::size_t vertex_count() const { return vertices().size(); }
    std::size_t edge_count() const { return alpha_.size() / 2; }
    std::size_t face_count() const { return faces().size(); }

    bool is_connected() const;
    /// The common face size, if all faces have the same size.
    std::optional<int> uniform_face_size() const;

    bool operator==(const CombinatorialMap&) const = default;

private:
    Permutation alpha_;
    Permutation sigma_;
};

/// Bipartite ribbon graph on darts: s pairs darts at white (edge) vertices,
/// r rotates darts counterclockwise around black (triangle) vertices.
class ModularGraph {
public:
    /// Throws DomainError unless s^2 = id and r^3 = id on a common dart set.
    ModularGraph(Permutation s, Permutation r);

    std::size_t dart_count() const { return s_.size(); }
    const Permutation& s() const { return s_; }
    const Permutation& r() const { return r_; }

    bool is_transitive() const;
    /// s or r has fixed points (terminal white vertices / torsion).
    bool is_degenerate() const;

private:
    Permutation s_;
    Permutation r_;
};

/// Angles are exact integer multiples of pi/6.
struct Angle {
    int sixths = 0;
    auto operator<=>(const Angle&) const = default;
    std::string to_string() const; ///< e.g. "5pi/3", "pi", "0"
};

struct CurvatureEntry {
    int degree = 0;
    int count = 0;
    Angle kappa; ///< 2pi minus the cone angle
    Angle theta; ///< cone angle
    auto operator<=>(const CurvatureEntry&) const = default;
};

/// Per-degree vertex counts, ascending by degree.
struct CurvatureProfile {
    int face_size = 3;
    std::vector<CurvatureEntry> entries;

    bool operator==(const CurvatureProfile&) const = default;
    /// Builds a profile from degree -> count (zero counts dropped).
    static CurvatureProfile from_counts(int face_size, const std::map<int, int>& counts);
    std::map<int, int> counts() const;
    std::string to_string() const; ///< "2:3,6:5"
};

/// Curvature of a vertex of the given degree: (6-d) pi/3 for triangles, (4-d) pi/2 for squares.
Angle vertex_curvature(int face_size, int degree);
/// Degree of a flat vertex: 6 for triangles, 4 for squares.
int flat_degree(int face_size);

int euler_characteristic(const CombinatorialMap& map);
/// Throws DomainError if face_size is not 3 or 4 or some face has another size.
CurvatureProfile curvature_profile(const CombinatorialMap& map, int face_size);
/// Sum of vertex curvatures in units of pi/6.
int total_curvature_sixths(const CombinatorialMap& map, int face_size);
/// Sum of curvatures equals 2 pi chi exactly. False when faces are not all of face_size.
bool gauss_bonnet_check(const CombinatorialMap& map, int face_size);
bool is_nonneg_curved(const CombinatorialMap& map, int face_size);
/// Vertices of positive curvature. Requires a non-negatively curved sphere;
/// the count is then at most 12 (triangles) or 8 (squares).
int positive_vertex_count(const CombinatorialMap& map, int face_size);
/// Genus of a connected map.
int map_genus(const CombinatorialMap& map);

/// The dual of a triangulation: s = alpha, r = phi^-1.
ModularGraph dual_modular_graph(const CombinatorialMap& triangulation);

struct CoverStats {
    int degree = 0; ///< darts
    int cusps = 0;  ///< cycles of s o r
    int genus = 0;
    int black = 0;  ///< cycles of r
    int white = 0;  ///< cycles of s
};

CoverStats cover_stats(const ModularGraph& g);

/// Orientation-preserving isomorphism: a dart bijection conjugating alpha and
/// sigma simultaneously. Found by propagation from each candidate image of dart 0.
bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

/// Byte string constant exactly on isomorphism classes (lexicographically
/// least breadth-first relabelling over all starting darts, per component).
std::string canonical_label(const CombinatorialMap& map);

/// Relabels darts by an arbitrary permutation: new id of dart d is relabel[d].
CombinatorialMap relabel_darts(const CombinatorialMap& map, std::span<const Dart> relabel);

/// Largest face count accepted by enumerate_small_maps.
inline constexpr int kSmallMapFaceLimit = 8;

/// Every isomorphism class of connected sphere maps with face_count faces of
/// size face_size and exactly the given vertex-degree profile, by exhaustive
/// edge gluing. Sorted by canonical label. Throws DomainError above the face limit.
std::vector<CombinatorialMap> enumerate_small_maps(int face_size, int face_count, const CurvatureProfile& profile);

} // namespace hyperlat
