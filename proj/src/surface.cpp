#include "hyperlat/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

void require_permutation(std::span<const Dart> perm, std::size_t n, const char* name)
{
    if (perm.size() != n) throw DomainError(std::string(name) + " has the wrong length");
    std::vector<char> seen(n, 0);
    for (Dart d : perm) {
        if (d < 0 || static_cast<std::size_t>(d) >= n) throw DomainError(std::string(name) + " has an entry out of range");
        if (seen[d]) throw DomainError(std::string(name) + " is not a permutation");
        seen[d] = 1;
    }
}

std::vector<int> component_of(const CombinatorialMap& map, int& count)
{
    const std::size_t n = map.dart_count();
    std::vector<int> comp(n, -1);
    count = 0;
    std::vector<Dart> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(static_cast<Dart>(s));
        while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            for (Dart t : {map.alpha(d), map.sigma(d)})
                if (comp[t] < 0) {
                    comp[t] = count;
                    stack.push_back(t);
                }
        }
        ++count;
    }
    return comp;
}

std::vector<CombinatorialMap> components(const CombinatorialMap& map)
{
    int count = 0;
    const auto comp = component_of(map, count);
    std::vector<CombinatorialMap> out;
    for (int c = 0; c < count; ++c) {
        std::vector<Dart> local(map.dart_count(), -1);
        Dart next = 0;
        for (std::size_t d = 0; d < map.dart_count(); ++d)
            if (comp[d] == c) local[d] = next++;
        Permutation alpha(next), sigma(next);
        for (std::size_t d = 0; d < map.dart_count(); ++d)
            if (comp[d] == c) {
                alpha[local[d]] = local[map.alpha(static_cast<Dart>(d))];
                sigma[local[d]] = local[map.sigma(static_cast<Dart>(d))];
            }
        out.emplace_back(std::move(alpha), std::move(sigma));
    }
    return out;
}

bool connected_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b)
{
    const std::size_t n = a.dart_count();
    if (n != b.dart_count()) return false;
    if (n == 0) return true;
    std::vector<Dart> image(n), preimage(n);
    std::vector<Dart> queue;
    for (std::size_t t = 0; t < n; ++t) {
        std::fill(image.begin(), image.end(), -1);
        std::fill(preimage.begin(), preimage.end(), -1);
        queue.assign(1, 0);
        image[0] = static_cast<Dart>(t);
        preimage[t] = 0;
        bool ok = true;
        for (std::size_t i = 0; i < queue.size() && ok; ++i) {
            const Dart d = queue[i];
            const std::pair<Dart, Dart> steps[2] = {{a.alpha(d), b.alpha(image[d])}, {a.sigma(d), b.sigma(image[d])}};
            for (const auto& [da, db] : steps) {
                if (image[da] < 0) {
                    if (preimage[db] >= 0) {
                        ok = false;
                        break;
                    }
                    image[da] = db;
                    preimage[db] = da;
                    queue.push_back(da);
                } else if (image[da] != db) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && queue.size() == n) return true;
    }
    return false;
}

void append_u32(std::string& out, std::uint32_t v)
{
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xff));
}

std::string connected_label(const CombinatorialMap& map)
{
    const std::size_t n = map.dart_count();
    std::string header;
    append_u32(header, static_cast<std::uint32_t>(n));
    if (n == 0) return header;

    // Only darts with the least (vertex degree, face size) can start the relabelling.
    const auto verts = map.vertices();
    const auto faces = map.faces();
    std::vector<std::pair<std::size_t, std::size_t>> key(n);
    for (const auto& v : verts)
        for (Dart d : v) key[d].first = v.size();
    for (const auto& f : faces)
        for (Dart d : f) key[d].second = f.size();
    const auto least = *std::min_element(key.begin(), key.end());

    std::vector<std::uint32_t> best, code;
    std::vector<Dart> label(n), order;
    code.reserve(2 * n);
    order.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (key[s] != least) continue;
        std::fill(label.begin(), label.end(), -1);
        order.assign(1, static_cast<Dart>(s));
        label[s] = 0;
        code.clear();
        int cmp = best.empty() ? -1 : 0; // <0: already smaller than best
        for (std::size_t i = 0; i < n && cmp <= 0; ++i) {
            const Dart d = order[i];
            for (Dart t : {map.alpha(d), map.sigma(d)}) {
                if (label[t] < 0) {
                    label[t] = static_cast<Dart>(order.size());
                    order.push_back(t);
                }
                const auto v = static_cast<std::uint32_t>(label[t]);
                if (cmp == 0) {
                    const auto bv = best[code.size()];
                    if (v < bv) cmp = -1;
                    else if (v > bv) {
                        cmp = 1;
                        break;
                    }
                }
                code.push_back(v);
            }
        }
        if (cmp < 0) best = code;
    }
    std::string out = header;
    for (auto v : best) append_u32(out, v);
    return out;
}

} // namespace

std::vector<std::vector<Dart>> cycles_of(std::span<const Dart> perm)
{
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Dart> cyc;
        for (Dart d = static_cast<Dart>(s); !seen[d]; d = perm[d]) {
            seen[d] = 1;
            cyc.push_back(d);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation inverse_of(std::span<const Dart> perm)
{
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Dart>(i);
    return inv;
}

Permutation compose(std::span<const Dart> f, std::span<const Dart> g)
{
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
}

CombinatorialMap::CombinatorialMap(Permutation alpha, Permutation sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma))
{
    const std::size_t n = alpha_.size();
    require_permutation(alpha_, n, "alpha");
    require_permutation(sigma_, n, "sigma");
    for (std::size_t d = 0; d < n; ++d) {
        if (alpha_[d] == static_cast<Dart>(d)) throw DomainError("alpha has a fixed point at dart " + std::to_string(d));
        if (alpha_[alpha_[d]] != static_cast<Dart>(d)) throw DomainError("alpha is not an involution at dart " + std::to_string(d));
    }
}

bool CombinatorialMap::is_connected() const
{
    int count = 0;
    component_of(*this, count);
    return count <= 1;
}

std::optional<int> CombinatorialMap::uniform_face_size() const
{
    const auto fs = faces();
    if (fs.empty()) return std::nullopt;
    const std::size_t size = fs.front().size();
    for (const auto& f : fs)
        if (f.size() != size) return std::nullopt;
    return static_cast<int>(size);
}

ModularGraph::ModularGraph(Permutation s, Permutation r) : s_(std::move(s)), r_(std::move(r))
{
    const std::size_t n = s_.size();
    require_permutation(s_, n, "s");
    require_permutation(r_, n, "r");
    for (std::size_t d = 0; d < n; ++d) {
        if (s_[s_[d]] != static_cast<Dart>(d)) throw DomainError("s does not square to the identity");
        if (r_[r_[r_[d]]] != static_cast<Dart>(d)) throw DomainError("r does not cube to the identity");
    }
}

bool ModularGraph::is_transitive() const
{
    if (s_.empty()) return true;
    std::vector<char> seen(s_.size(), 0);
    std::vector<Dart> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Dart d = stack.back();
        stack.pop_back();
        for (Dart t : {s_[d], r_[d]})
            if (!seen[t]) {
                seen[t] = 1;
                ++reached;
                stack.push_back(t);
            }
    }
    return reached == s_.size();
}

bool ModularGraph::is_degenerate() const
{
    for (std::size_t d = 0; d < s_.size(); ++d)
        if (s_[d] == static_cast<Dart>(d) || r_[d] == static_cast<Dart>(d)) return true;
    return false;
}

std::string Angle::to_string() const
{
    if (sixths == 0) return "0";
    const int g = std::gcd(std::abs(sixths), 6);
    const int num = sixths / g;
    const int den = 6 / g;
    std::string s = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

CurvatureProfile CurvatureProfile::from_counts(int face_size, const std::map<int, int>& counts)
{
    CurvatureProfile p;
    p.face_size = face_size;
    for (const auto& [deg, cnt] : counts) {
        if (cnt == 0) continue;
        const Angle kappa = vertex_curvature(face_size, deg);
        p.entries.push_back({deg, cnt, kappa, Angle{12 - kappa.sixths}});
    }
    return p;
}

std::map<int, int> CurvatureProfile::counts() const
{
    std::map<int, int> out;
    for (const auto& e : entries) out[e.degree] += e.count;
    return out;
}

std::string CurvatureProfile::to_string() const
{
    std::string s;
    for (const auto& e : entries) {
        if (!s.empty()) s += ',';
        s += std::to_string(e.degree) + ":" + std::to_string(e.count);
    }
    return s;
}

int flat_degree(int face_size)
{
    if (face_size == 3) return 6;
    if (face_size == 4) return 4;
    throw DomainError("face size must be 3 or 4");
}

Angle vertex_curvature(int face_size, int degree)
{
    // corner angle pi/3 (2 sixths) or pi/2 (3 sixths)
    const int corner = face_size == 3 ? 2 : 3;
    return Angle{corner * (flat_degree(face_size) - degree)};
}

int euler_characteristic(const CombinatorialMap& map)
{
    return static_cast<int>(map.vertex_count()) - static_cast<int>(map.edge_count()) +
           static_cast<int>(map.face_count());
}

CurvatureProfile curvature_profile(const CombinatorialMap& map, int face_size)
{
    flat_degree(face_size);
    for (const auto& f : map.faces())
        if (static_cast<int>(f.size()) != face_size)
            throw DomainError("face of size " + std::to_string(f.size()) + " in a map expected to have faces of size " +
                              std::to_string(face_size));
    std::map<int, int> counts;
    for (const auto& v : map.vertices()) ++counts[static_cast<int>(v.size())];
    return CurvatureProfile::from_counts(face_size, counts);
}

int total_curvature_sixths(const CombinatorialMap& map, int face_size)
{
    int total = 0;
    for (const auto& v : map.vertices()) total += vertex_curvature(face_size, static_cast<int>(v.size())).sixths;
    return total;
}

bool gauss_bonnet_check(const CombinatorialMap& map, int face_size)
{
    if (map.uniform_face_size() != face_size) return false;
    return total_curvature_sixths(map, face_size) == 12 * euler_characteristic(map);
}

bool is_nonneg_curved(const CombinatorialMap& map, int face_size)
{
    const int flat = flat_degree(face_size);
    for (const auto& v : map.vertices())
        if (static_cast<int>(v.size()) > flat) return false;
    return true;
}

int positive_vertex_count(const CombinatorialMap& map, int face_size)
{
    if (!map.is_connected() || euler_characteristic(map) != 2 || !is_nonneg_curved(map, face_size) ||
        map.uniform_face_size() != face_size)
        throw DomainError("positive_vertex_count requires a non-negatively curved sphere");
    const int flat = flat_degree(face_size);
    int count = 0;
    for (const auto& v : map.vertices())
        if (static_cast<int>(v.size()) < flat) ++count;
    // each positive vertex carries at least pi/3 (pi/2) of the total 4 pi
    const int bound = face_size == 3 ? 12 : 8;
    if (count > bound) throw std::logic_error("positive vertex count exceeds the Gauss-Bonnet bound");
    return count;
}

int map_genus(const CombinatorialMap& map)
{
    if (!map.is_connected()) throw DomainError("genus is defined for connected maps only");
    return (2 - euler_characteristic(map)) / 2;
}

ModularGraph dual_modular_graph(const CombinatorialMap& triangulation)
{
    if (triangulation.uniform_face_size() != 3) throw DomainError("dual modular graph needs a triangulation");
    return ModularGraph(triangulation.alpha(), inverse_of(triangulation.phi()));
}

CoverStats cover_stats(const ModularGraph& g)
{
    if (!g.is_transitive()) throw DomainError("modular graph is not connected");
    CoverStats st;
    st.degree = static_cast<int>(g.dart_count());
    st.black = static_cast<int>(cycles_of(g.r()).size());
    st.white = static_cast<int>(cycles_of(g.s()).size());
    st.cusps = static_cast<int>(cycles_of(compose(g.s(), g.r())).size());
    const int chi = st.black + st.white + st.cusps - st.degree;
    st.genus = (2 - chi) / 2;
    return st;
}

bool is_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b)
{
    if (a.dart_count() != b.dart_count()) return false;
    auto ca = components(a);
    auto cb = components(b);
    if (ca.size() != cb.size()) return false;
    std::vector<char> used(cb.size(), 0);
    for (const auto& x : ca) {
        bool found = false;
        for (std::size_t j = 0; j < cb.size() && !found; ++j)
            if (!used[j] && connected_isomorphic(x, cb[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

std::string canonical_label(const CombinatorialMap& map)
{
    std::vector<std::string> parts;
    for (const auto& c : components(map)) parts.push_back(connected_label(c));
    std::sort(parts.begin(), parts.end());
    std::string out;
    append_u32(out, static_cast<std::uint32_t>(parts.size()));
    for (const auto& p : parts) out += p;
    return out;
}

CombinatorialMap relabel_darts(const CombinatorialMap& map, std::span<const Dart> relabel)
{
    const std::size_t n = map.dart_count();
    require_permutation(relabel, n, "relabelling");
    Permutation alpha(n), sigma(n);
    for (std::size_t d = 0; d < n; ++d) {
        alpha[relabel[d]] = relabel[map.alpha(static_cast<Dart>(d))];
        sigma[relabel[d]] = relabel[map.sigma(static_cast<Dart>(d))];
    }
    return CombinatorialMap(std::move(alpha), std::move(sigma));
}

} // namespace hyperlat
