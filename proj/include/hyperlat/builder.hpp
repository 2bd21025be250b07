#pragma once

// Sphere triangulations and quadrangulations from lattice data, built as
// quotients of the unit triangular (square) grid by a discrete group of
// rotations about lattice points:
//
//   eis-deg2   alpha in Eis:       order-3 rotations about 0 and alpha
//              -> 3 vertices of degree 2, 2 N(alpha) triangles
//   eis-deg3   (z1, z2) in 2Eis^2: pi-rotations about z1/2, z2/2, (z1+z2)/2
//              -> 4 vertices of degree 3
//   gauss-deg2 (z1, z2) in 2Z[i]^2: the same on the square grid
//              -> 4 vertices of degree 2
//
// Darts of the quotient are grid half-edges (vertex, direction) modulo the
// group; sigma turns a half-edge counterclockwise to the next grid direction.

#include <optional>
#include <string_view>

#include "hyperlat/lattice.hpp"
#include "hyperlat/surface.hpp"

namespace hyperlat {

enum class Family { EisDeg2, EisDeg3, GaussDeg2 };

std::string_view family_name(Family f); ///< "eis-deg2", "eis-deg3", "gauss-deg2"
Family parse_family(std::string_view name);
int family_face_size(Family f);
/// Degree of the cone vertices (2, 3 or 2) and how many there are (3, 4 or 4).
int family_cone_degree(Family f);
int family_cone_count(Family f);

/// The vertex-degree profile every member with `cells` faces must have, or
/// nullopt when no sphere with that many faces can carry it.
std::optional<CurvatureProfile> family_profile(Family f, int cells);

CombinatorialMap build_eis_deg2(const EisensteinInt& alpha);
CombinatorialMap build_eis_deg3(const EisPair& z);
CombinatorialMap build_gauss_deg2(const GaussPair& z);

/// Parses `point` in the family's ring ("a+bd", "z1;z2", "a+bi;c+di") and builds.
CombinatorialMap build_family(Family f, std::string_view point);

/// Number of faces the family's construction produces for `point`.
std::int64_t family_cell_count(Family f, std::string_view point);

/// Replaces every face by k^2 faces of the same shape. Requires a map whose
/// faces are all triangles or all squares; k >= 1.
CombinatorialMap subdivide(const CombinatorialMap& map, int k);

} // namespace hyperlat
