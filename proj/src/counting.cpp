#include "hyperlat/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <set>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

void require_budget(int n_max)
{
    const int budget = count_budget();
    if (n_max > budget)
        throw BudgetError("cell count " + std::to_string(n_max) + " exceeds the budget of " + std::to_string(budget) +
                          " (set HYPERLAT_BUDGET to raise it)");
}

// Points of R with norm <= bound, in a box that certainly contains them.
template <Ring R>
std::vector<LatticeInt<R>> disk(std::int64_t bound, bool sector_only)
{
    std::vector<LatticeInt<R>> out;
    const auto r = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(bound))) + 2;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b) {
            const LatticeInt<R> x{a, b};
            if (sector_only && !(a > 0 && b >= 0)) continue;
            if (x.norm() <= bound) out.push_back(x);
        }
    return out;
}

// Reduced pairs have |z1| <= |z2| and an angle in [pi/3, 2pi/3], so
// |z1| |z2| <= 4 area / sqrt(3). With area n sqrt(3)/4 (Eisenstein) or n
// (Gaussian) that bounds |z1|^2 and, since |z1| >= 2, also |z2|.
template <Ring R>
std::map<int, std::vector<std::string>> pair_points(int n_max, int jobs)
{
    const std::int64_t n = n_max;
    std::int64_t z1_bound, z2_bound;
    if constexpr (R == Ring::Eisenstein) {
        z1_bound = n;
        z2_bound = (n * n + 3) / 4;
    } else {
        z1_bound = static_cast<std::int64_t>(std::ceil(4.0 * n / std::sqrt(3.0)));
        z2_bound = static_cast<std::int64_t>(std::ceil(4.0 * n * n / 3.0));
    }
    std::vector<LatticeInt<R>> firsts, seconds;
    for (const auto& x : disk<R>(z1_bound / 4 + 1, true))
        if (x.scaled(2).norm() <= z1_bound) firsts.push_back(x.scaled(2));
    for (const auto& x : disk<R>(z2_bound / 4 + 1, false))
        if (x.scaled(2).norm() <= z2_bound) seconds.push_back(x.scaled(2));

    using Found = std::map<int, std::set<LorentzPair<R>>>;
    auto work = [&](std::size_t begin, std::size_t step) {
        Found found;
        for (std::size_t i = begin; i < firsts.size(); i += step)
            for (const auto& z2 : seconds) {
                const LorentzPair<R> z{firsts[i], z2};
                if (!is_positive(z)) continue;
                const auto cells = hermitian_cell_count(z);
                if (cells > n) continue;
                found[static_cast<int>(cells)].insert(pair_reduce(z).pair);
            }
        return found;
    };

    const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    std::vector<std::future<Found>> parts;
    for (std::size_t w = 0; w < workers; ++w) parts.push_back(std::async(std::launch::async, work, w, workers));
    Found merged;
    for (auto& part : parts)
        for (auto& [cells, reps] : part.get()) merged[cells].merge(reps);

    std::map<int, std::vector<std::string>> out;
    for (const auto& [cells, reps] : merged)
        for (const auto& rep : reps) out[cells].push_back(to_string(rep));
    return out;
}

std::map<int, std::vector<std::string>> deg2_points(int n_max)
{
    std::map<int, std::vector<std::string>> out;
    for (const auto& x : disk<Ring::Eisenstein>(n_max / 2, true)) {
        const std::int64_t cells = 2 * x.norm();
        if (cells >= 1 && cells <= n_max) out[static_cast<int>(cells)].push_back(to_string(x));
    }
    for (auto& [cells, points] : out) std::sort(points.begin(), points.end());
    return out;
}

} // namespace

int count_budget()
{
    if (const char* env = std::getenv("HYPERLAT_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1'000'000) return static_cast<int>(v);
    }
    return kDefaultCountBudget;
}

std::map<int, std::vector<std::string>> canonical_points(Family f, int n_max, int jobs)
{
    require_budget(n_max);
    if (n_max < 1) return {};
    std::map<int, std::vector<std::string>> out;
    switch (f) {
    case Family::EisDeg2: out = deg2_points(n_max); break;
    case Family::EisDeg3: out = pair_points<Ring::Eisenstein>(n_max, jobs); break;
    case Family::GaussDeg2: out = pair_points<Ring::Gaussian>(n_max, jobs); break;
    }
    for (auto& [cells, points] : out) std::sort(points.begin(), points.end());
    return out;
}

std::int64_t delta_n(Family f, int n, int jobs)
{
    if (n < 1) throw DomainError("delta_n: n must be positive");
    const auto points = canonical_points(f, n, jobs);
    const auto it = points.find(n);
    return it == points.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

CountSeries series(Family f, int n_max, int jobs)
{
    CountSeries s;
    s.family = f;
    if (n_max < 1) return s;
    const auto points = canonical_points(f, n_max, jobs);
    for (int n = 1; n <= n_max; ++n) {
        const auto it = points.find(n);
        s.entries.emplace_back(n, it == points.end() ? 0 : static_cast<std::int64_t>(it->second.size()));
    }
    return s;
}

CrosscheckResult crosscheck_detail(Family f, int n)
{
    if (n < 1 || n > kSmallMapFaceLimit)
        throw DomainError("crosscheck needs 1 <= n <= " + std::to_string(kSmallMapFaceLimit));
    CrosscheckResult r;
    r.n = n;

    std::set<std::string> built;
    const auto points = canonical_points(f, n);
    if (const auto it = points.find(n); it != points.end())
        for (const auto& p : it->second) built.insert(canonical_label(build_family(f, p)));
    r.lattice = delta_n(f, n);

    std::set<std::string> enumerated;
    if (const auto profile = family_profile(f, n))
        for (const auto& m : enumerate_small_maps(family_face_size(f), n, *profile)) enumerated.insert(canonical_label(m));
    r.surfaces = static_cast<std::int64_t>(enumerated.size());
    r.labels_match = built == enumerated && built.size() == static_cast<std::size_t>(r.lattice);
    return r;
}

bool crosscheck(Family f, int n) { return crosscheck_detail(f, n).ok(); }

std::string emit_series_csv(const CountSeries& s, const std::vector<CrosscheckResult>* checks)
{
    std::string out = checks ? "n,delta,surfaces,crosscheck\r\n" : "n,delta\r\n";
    for (const auto& [n, delta] : s.entries) {
        out += std::to_string(n) + "," + std::to_string(delta);
        if (checks) {
            const auto it = std::find_if(checks->begin(), checks->end(), [n = n](const auto& c) { return c.n == n; });
            if (it == checks->end()) out += ",,";
            else out += "," + std::to_string(it->surfaces) + "," + (it->ok() ? "pass" : "fail");
        }
        out += "\r\n";
    }
    return out;
}

} // namespace hyperlat
