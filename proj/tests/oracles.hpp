#pragma once

// Reference computations for the tests. Deliberately written without the
// library: plain tuples and loops, no shared helpers, so that agreement with
// the library means something.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// Number of nonnegative solutions of sum w_j x_j = total (coin-change DP).
inline std::int64_t weighted_solutions(int total, const std::vector<int>& weights)
{
    if (total < 0) return 0;
    std::vector<std::int64_t> ways(total + 1, 0);
    ways[0] = 1;
    for (int w : weights)
        for (int t = w; t <= total; ++t) ways[t] += ways[t - w];
    return ways[total];
}

// ---- orbit search on pairs ------------------------------------------------

// Element a + b g with g^2 = g - 1 (eis) or g^2 = -1 (gauss).
using Elt = std::array<std::int64_t, 2>;
using Pair = std::array<Elt, 2>;

inline Elt mul(const Elt& x, const Elt& y, bool eis)
{
    if (eis) return {x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0] + x[1] * y[1]};
    return {x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
}

// All pairs reachable from z by words of length <= depth in T1^{+-1},
// T2^{+-1} and multiplication by the generating unit (and its inverse).
inline std::set<Pair> orbit_ball(const Pair& z, int depth, bool eis)
{
    const Elt g{0, 1};
    const Elt g_inv = eis ? Elt{1, -1} : Elt{0, -1};
    auto add = [](const Elt& x, const Elt& y) { return Elt{x[0] + y[0], x[1] + y[1]}; };
    auto sub = [](const Elt& x, const Elt& y) { return Elt{x[0] - y[0], x[1] - y[1]}; };
    std::set<Pair> seen{z};
    std::vector<Pair> frontier{z};
    for (int step = 0; step < depth; ++step) {
        std::vector<Pair> next;
        for (const auto& p : frontier) {
            const Pair moves[] = {
                {p[0], add(p[0], p[1])}, {p[0], sub(p[1], p[0])}, // T1, T1^-1
                {sub(p[0], p[1]), p[1]}, {add(p[0], p[1]), p[1]}, // T2, T2^-1
                {mul(g, p[0], eis), mul(g, p[1], eis)},
                {mul(g_inv, p[0], eis), mul(g_inv, p[1], eis)},
            };
            for (const auto& m : moves)
                if (seen.insert(m).second) next.push_back(m);
        }
        frontier = std::move(next);
    }
    return seen;
}

// ---- brute-force sphere maps ----------------------------------------------

struct Map {
    std::vector<int> alpha, sigma;
};

inline std::vector<std::vector<int>> cycles(const std::vector<int>& p)
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int d = static_cast<int>(s); !seen[d]; d = p[d]) {
            seen[d] = true;
            c.push_back(d);
        }
        out.push_back(c);
    }
    return out;
}

inline bool connected(const Map& m)
{
    const int n = static_cast<int>(m.alpha.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (int e : {m.alpha[d], m.sigma[d]})
            if (!seen[e]) {
                seen[e] = true;
                ++count;
                stack.push_back(e);
            }
    }
    return count == n;
}

// Is there a bijection f with f(alpha_a(x)) = alpha_b(f(x)) and the same for sigma?
inline bool isomorphic(const Map& a, const Map& b)
{
    const int n = static_cast<int>(a.alpha.size());
    if (n != static_cast<int>(b.alpha.size())) return false;
    for (int start = 0; start < n; ++start) {
        std::vector<int> f(n, -1), finv(n, -1);
        std::vector<int> queue{0};
        f[0] = start;
        finv[start] = 0;
        bool ok = true;
        for (std::size_t q = 0; q < queue.size() && ok; ++q) {
            const int x = queue[q];
            const int pairs[2][2] = {{a.alpha[x], b.alpha[f[x]]}, {a.sigma[x], b.sigma[f[x]]}};
            for (const auto& pr : pairs) {
                if (f[pr[0]] < 0 && finv[pr[1]] < 0) {
                    f[pr[0]] = pr[1];
                    finv[pr[1]] = pr[0];
                    queue.push_back(pr[0]);
                } else if (f[pr[0]] != pr[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && static_cast<int>(queue.size()) == n) return true;
    }
    return false;
}

// Isomorphism classes of connected sphere maps with `faces` faces of size
// `s`, grouped by sorted vertex-degree list. Every perfect matching of the
// darts is tried; faces are the dart blocks [s*f, s*f+s).
inline std::map<std::vector<int>, std::vector<Map>> sphere_maps(int s, int faces)
{
    const int n = s * faces;
    std::vector<int> phi(n);
    for (int d = 0; d < n; ++d) phi[d] = (d % s == s - 1) ? d - (s - 1) : d + 1;
    std::map<std::vector<int>, std::vector<Map>> classes;
    std::vector<int> alpha(n, -1);
    std::function<void()> rec = [&] {
        int d = 0;
        while (d < n && alpha[d] >= 0) ++d;
        if (d == n) {
            Map m{alpha, std::vector<int>(n)};
            for (int x = 0; x < n; ++x) m.sigma[x] = alpha[phi[x]];
            if (!connected(m)) return;
            const auto verts = cycles(m.sigma);
            if (static_cast<int>(verts.size()) - n / 2 + faces != 2) return;
            std::vector<int> degrees;
            for (const auto& v : verts) degrees.push_back(static_cast<int>(v.size()));
            std::sort(degrees.begin(), degrees.end());
            auto& reps = classes[degrees];
            for (const auto& r : reps)
                if (isomorphic(r, m)) return;
            reps.push_back(m);
            return;
        }
        for (int e = d + 1; e < n; ++e)
            if (alpha[e] < 0) {
                alpha[d] = e;
                alpha[e] = d;
                rec();
                alpha[d] = alpha[e] = -1;
            }
    };
    if (n % 2 == 0) rec();
    return classes;
}

} // namespace oracle
