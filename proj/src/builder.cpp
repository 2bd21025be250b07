#include "hyperlat/builder.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t num, std::int64_t den) { return num - floor_div(num, den) * den; }

// Extended gcd: returns g >= 0 with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = checked::sub(old_r, checked::mul(q, r));
        std::swap(old_r, r);
        old_s = checked::sub(old_s, checked::mul(q, s));
        std::swap(old_s, s);
        old_t = checked::sub(old_t, checked::mul(q, t));
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

// Hermite basis (p, q), (0, r) of a full-rank sublattice of Z^2; cosets are
// represented by 0 <= x < p, 0 <= y < r.
struct Sublattice {
    std::int64_t p = 1, q = 0, r = 1;

    Sublattice(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2)
    {
        const std::int64_t det = checked::sub(checked::mul(a1, b2), checked::mul(a2, b1));
        if (det == 0) throw DomainError("lattice generators are collinear");
        std::int64_t s = 0, t = 0;
        p = ext_gcd(a1, a2, s, t);
        r = (det < 0 ? -det : det) / p;
        q = floor_mod(checked::add(checked::mul(s, b1), checked::mul(t, b2)), r);
    }

    std::int64_t index() const { return checked::mul(p, r); }

    std::int64_t coset(std::int64_t x, std::int64_t y) const
    {
        const std::int64_t k = floor_div(x, p);
        x -= k * p;
        y = floor_mod(checked::sub(y, checked::mul(k, q)), r);
        return x * r + y;
    }
};

template <Ring R>
CombinatorialMap grid_quotient(const LatticeInt<R>& v1, const LatticeInt<R>& v2, int rotation_step)
{
    constexpr int D = LatticeInt<R>::unit_count;
    const Sublattice lat(v1.a, v1.b, v2.a, v2.b);
    const std::int64_t cosets = lat.index();
    const std::int64_t torus_darts = checked::mul(cosets, D);
    if (torus_darts > (std::int64_t{1} << 26)) throw BudgetError("surface too large to build");

    auto point_of = [&](std::int64_t c) { return LatticeInt<R>{c / lat.r, c % lat.r}; };
    auto dart_id = [&](const LatticeInt<R>& v, int dir) {
        return lat.coset(v.a, v.b) * D + ((dir % D) + D) % D;
    };
    auto orbit_rep = [&](std::int64_t t) {
        const LatticeInt<R> v = point_of(t / D);
        const int dir = static_cast<int>(t % D);
        std::int64_t best = t;
        for (int j = rotation_step; j < D; j += rotation_step)
            best = std::min(best, dart_id(LatticeInt<R>::unit(j) * v, dir + j));
        return best;
    };

    std::vector<Dart> quotient_id(static_cast<std::size_t>(torus_darts), -1);
    std::vector<std::int64_t> reps;
    for (std::int64_t t = 0; t < torus_darts; ++t)
        if (orbit_rep(t) == t) {
            quotient_id[t] = static_cast<Dart>(reps.size());
            reps.push_back(t);
        }
    auto id_of = [&](std::int64_t t) { return quotient_id[orbit_rep(t)]; };

    Permutation alpha(reps.size()), sigma(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const LatticeInt<R> v = point_of(reps[i] / D);
        const int dir = static_cast<int>(reps[i] % D);
        sigma[i] = id_of(dart_id(v, dir + 1));
        alpha[i] = id_of(dart_id(v + LatticeInt<R>::unit(dir), dir + D / 2));
    }
    return CombinatorialMap(std::move(alpha), std::move(sigma));
}

template <Ring R>
void require_pair(const LorentzPair<R>& z)
{
    if (!z.in_doubled_lattice()) throw DomainError("pair " + to_string(z) + " is not in 2R + 2R");
    if (!is_positive(z)) throw DomainError("pair " + to_string(z) + " is not positively oriented");
}

// Local grid geometry of one reference face subdivided k times.
struct ReferenceFace {
    int face_size;
    int k;
    int dirs;
    std::vector<std::array<int, 2>> unit; // direction -> (dx, dy) in the ring basis
    std::vector<std::array<int, 2>> corners;

    ReferenceFace(int s, int k_) : face_size(s), k(k_), dirs(s == 3 ? 6 : 4)
    {
        if (s == 3) {
            unit = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
            corners = {{0, 0}, {k, 0}, {0, k}};
        } else {
            unit = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            corners = {{0, 0}, {k, 0}, {k, k}, {0, k}};
        }
    }

    bool inside(int x, int y) const
    {
        if (face_size == 3) return x >= 0 && y >= 0 && x + y <= k;
        return x >= 0 && y >= 0 && x <= k && y <= k;
    }

    std::array<int, 2> step(std::array<int, 2> p, int dir) const
    {
        const auto& u = unit[((dir % dirs) + dirs) % dirs];
        return {p[0] + u[0], p[1] + u[1]};
    }

    // Is the small face on the left of (p, dir) inside the reference face?
    bool valid(std::array<int, 2> p, int dir) const
    {
        const auto a = step(p, dir);
        const auto b = step(p, dir + 1);
        if (!inside(p[0], p[1]) || !inside(a[0], a[1]) || !inside(b[0], b[1])) return false;
        if (face_size == 4) {
            const auto c = step(a, dir + 1);
            return inside(c[0], c[1]);
        }
        return true;
    }

    int slot(std::array<int, 2> p, int dir) const
    {
        return ((p[0] * (k + 1)) + p[1]) * dirs + ((dir % dirs) + dirs) % dirs;
    }
};

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::EisDeg2: return "eis-deg2";
    case Family::EisDeg3: return "eis-deg3";
    case Family::GaussDeg2: return "gauss-deg2";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    if (name == "eis-deg2") return Family::EisDeg2;
    if (name == "eis-deg3") return Family::EisDeg3;
    if (name == "gauss-deg2") return Family::GaussDeg2;
    throw ParseError("unknown family '" + std::string(name) + "' (expected eis-deg2, eis-deg3 or gauss-deg2)");
}

int family_face_size(Family f) { return f == Family::GaussDeg2 ? 4 : 3; }
int family_cone_degree(Family f) { return f == Family::EisDeg3 ? 3 : 2; }
int family_cone_count(Family f) { return f == Family::EisDeg2 ? 3 : 4; }

std::optional<CurvatureProfile> family_profile(Family f, int cells)
{
    const int s = family_face_size(f);
    if (cells <= 0 || (s * cells) % 2 != 0) return std::nullopt;
    const int edges = s * cells / 2;
    const int vertices = edges - cells + 2;
    const int flats = vertices - family_cone_count(f);
    if (flats < 0) return std::nullopt;
    return CurvatureProfile::from_counts(s, {{family_cone_degree(f), family_cone_count(f)}, {flat_degree(s), flats}});
}

CombinatorialMap build_eis_deg2(const EisensteinInt& alpha)
{
    if (alpha.is_zero()) throw DomainError("build_eis_deg2: alpha must be nonzero");
    // Translations of the group: alpha (1 - w) Eis, w = d^2.
    const EisensteinInt gen = alpha * (EisensteinInt{1, 0} - EisensteinInt::unit(2));
    return grid_quotient(gen, gen * EisensteinInt::unit(1), 2);
}

CombinatorialMap build_eis_deg3(const EisPair& z)
{
    require_pair(z);
    return grid_quotient(z.z1, z.z2, 3);
}

CombinatorialMap build_gauss_deg2(const GaussPair& z)
{
    require_pair(z);
    return grid_quotient(z.z1, z.z2, 2);
}

CombinatorialMap build_family(Family f, std::string_view point)
{
    switch (f) {
    case Family::EisDeg2: return build_eis_deg2(parse_lattice_int<Ring::Eisenstein>(point));
    case Family::EisDeg3: return build_eis_deg3(parse_pair<Ring::Eisenstein>(point));
    case Family::GaussDeg2: return build_gauss_deg2(parse_pair<Ring::Gaussian>(point));
    }
    throw std::logic_error("unreachable");
}

std::int64_t family_cell_count(Family f, std::string_view point)
{
    switch (f) {
    case Family::EisDeg2: return checked::mul(2, parse_lattice_int<Ring::Eisenstein>(point).norm());
    case Family::EisDeg3: return hermitian_cell_count(parse_pair<Ring::Eisenstein>(point));
    case Family::GaussDeg2: return hermitian_cell_count(parse_pair<Ring::Gaussian>(point));
    }
    throw std::logic_error("unreachable");
}

CombinatorialMap subdivide(const CombinatorialMap& map, int k)
{
    if (k < 1) throw DomainError("subdivide: k must be at least 1");
    const auto size = map.uniform_face_size();
    if (size != 3 && size != 4) throw DomainError("subdivide: faces must all be triangles or all squares");
    if (k == 1) return map;

    const ReferenceFace ref(*size, k);
    const int s = *size;

    // Small darts of one reference face.
    std::vector<std::array<int, 3>> local; // x, y, dir
    std::vector<int> slot_to_local(static_cast<std::size_t>((k + 1) * (k + 1) * ref.dirs), -1);
    for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y)
            for (int dir = 0; dir < ref.dirs; ++dir)
                if (ref.valid({x, y}, dir)) {
                    slot_to_local[ref.slot({x, y}, dir)] = static_cast<int>(local.size());
                    local.push_back({x, y, dir});
                }
    const int per_face = static_cast<int>(local.size());

    // Boundary darts along side j, at offset t from corner j.
    std::vector<std::vector<int>> boundary(s, std::vector<int>(k));
    for (int j = 0; j < s; ++j) {
        const auto& c0 = ref.corners[j];
        const auto& c1 = ref.corners[(j + 1) % s];
        const std::array<int, 2> e{(c1[0] - c0[0]) / k, (c1[1] - c0[1]) / k};
        int dir = 0;
        while (ref.unit[dir] != e) ++dir;
        for (int t = 0; t < k; ++t) boundary[j][t] = slot_to_local[ref.slot({c0[0] + t * e[0], c0[1] + t * e[1]}, dir)];
    }

    // Each original dart is side j of its face, with side j = phi^-j(first dart).
    const auto faces = map.faces();
    std::vector<std::pair<int, int>> side_of(map.dart_count());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int i = 0; i < s; ++i) side_of[faces[f][i]] = {static_cast<int>(f), (s - i) % s};
    auto side_dart = [&](int f, int j) { return faces[f][(s - j) % s]; };
    std::vector<std::pair<int, int>> boundary_pos(per_face, {-1, -1});
    for (int j = 0; j < s; ++j)
        for (int t = 0; t < k; ++t) boundary_pos[boundary[j][t]] = {j, t};

    const std::size_t total = faces.size() * static_cast<std::size_t>(per_face);
    Permutation alpha(total), phi(total);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const Dart base = static_cast<Dart>(f * per_face);
        for (int i = 0; i < per_face; ++i) {
            const auto [x, y, dir] = local[i];
            const auto next = ref.step({x, y}, dir + 1);
            phi[base + i] = base + slot_to_local[ref.slot(next, dir + 1 + ref.dirs / 2)];

            const auto head = ref.step({x, y}, dir);
            if (ref.inside(head[0], head[1]) && ref.valid(head, dir + ref.dirs / 2)) {
                alpha[base + i] = base + slot_to_local[ref.slot(head, dir + ref.dirs / 2)];
            } else {
                const auto [j, t] = boundary_pos[i];
                const Dart across = map.alpha(side_dart(static_cast<int>(f), j));
                const auto [f2, j2] = side_of[across];
                alpha[base + i] = static_cast<Dart>(f2 * per_face + boundary[j2][k - 1 - t]);
            }
        }
    }
    return CombinatorialMap(alpha, compose(alpha, phi));
}

} // namespace hyperlat
