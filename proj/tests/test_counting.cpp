#include <doctest.h>

#include <cstdlib>
#include <set>

#include "hyperlat/counting.hpp"
#include "hyperlat/errors.hpp"

using namespace hyperlat;

namespace {

struct BudgetEnv {
    explicit BudgetEnv(const char* value) { setenv("HYPERLAT_BUDGET", value, 1); }
    ~BudgetEnv() { unsetenv("HYPERLAT_BUDGET"); }
};

} // namespace

TEST_CASE("delta_n examples")
{
    CHECK(delta_n(Family::EisDeg2, 2) == 1);
    CHECK(delta_n(Family::EisDeg2, 4) == 0);
    CHECK(delta_n(Family::EisDeg3, 4) == 1);
    CHECK(delta_n(Family::GaussDeg2, 2) == 1);
    CHECK(delta_n(Family::EisDeg3, 2) == 0);
    CHECK_THROWS_AS(delta_n(Family::EisDeg2, 0), DomainError);
}

TEST_CASE("series")
{
    const auto s = series(Family::EisDeg2, 8);
    REQUIRE(s.entries.size() == 8);
    const std::vector<std::pair<int, std::int64_t>> expected{{1, 0}, {2, 1}, {3, 0}, {4, 0}, {5, 0}, {6, 1}, {7, 0}, {8, 1}};
    CHECK(s.entries == expected);
    const auto g = series(Family::GaussDeg2, 4);
    CHECK(g.entries[1] == std::pair<int, std::int64_t>{2, 1});
    CHECK(series(Family::EisDeg3, 0).entries.empty());
    CHECK(emit_series_csv(series(Family::GaussDeg2, 24, 1)) == emit_series_csv(series(Family::GaussDeg2, 24, 6)));
    CHECK(emit_series_csv(s) == "n,delta\r\n1,0\r\n2,1\r\n3,0\r\n4,0\r\n5,0\r\n6,1\r\n7,0\r\n8,1\r\n");
}

TEST_CASE("eis-deg2 counts are the sector points of norm n/2")
{
    const auto s = series(Family::EisDeg2, 60);
    for (const auto& [n, delta] : s.entries) {
        std::int64_t expected = 0;
        if (n % 2 == 0)
            for (int a = 1; a <= 10; ++a)
                for (int b = 0; b <= 10; ++b)
                    if (a * a + a * b + b * b == n / 2) ++expected;
        CHECK(delta == expected);
    }
}

TEST_CASE("subdivision injects: delta(k^2 n) >= delta(n)")
{
    for (Family f : {Family::EisDeg2, Family::EisDeg3, Family::GaussDeg2}) {
        const auto s = series(f, 72, 4);
        for (int n = 1; 4 * n <= 72; ++n) CHECK(s.entries[4 * n - 1].second >= s.entries[n - 1].second);
        for (int n = 1; 9 * n <= 72; ++n) CHECK(s.entries[9 * n - 1].second >= s.entries[n - 1].second);
    }
}

TEST_CASE("canonical points are reduced and counted once")
{
    for (const auto& [cells, points] : canonical_points(Family::GaussDeg2, 24, 3)) {
        std::set<std::string> seen(points.begin(), points.end());
        CHECK(seen.size() == points.size());
        for (const auto& p : points) {
            const auto z = parse_pair<Ring::Gaussian>(p);
            CHECK(pair_reduce(z).pair == z);
            CHECK(hermitian_cell_count(z) == cells);
        }
    }
}

TEST_CASE("budget")
{
    CHECK(count_budget() == kDefaultCountBudget);
    CHECK_THROWS_AS(series(Family::EisDeg3, 97), BudgetError);
    {
        BudgetEnv env("10");
        CHECK(count_budget() == 10);
        CHECK_THROWS_AS(series(Family::GaussDeg2, 11), BudgetError);
        CHECK_NOTHROW(series(Family::GaussDeg2, 10));
    }
    {
        BudgetEnv env("nonsense");
        CHECK(count_budget() == kDefaultCountBudget);
    }
    {
        BudgetEnv env("120");
        CHECK_NOTHROW(series(Family::EisDeg2, 120));
    }
}

TEST_CASE("crosscheck with exhaustive small maps")
{
    for (Family f : {Family::EisDeg2, Family::EisDeg3, Family::GaussDeg2})
        for (int n = 1; n <= kSmallMapFaceLimit; ++n) {
            const auto r = crosscheck_detail(f, n);
            CHECK_MESSAGE(r.ok(), family_name(f), " n=", n);
        }
    CHECK(crosscheck(Family::EisDeg3, 4));
    CHECK(crosscheck(Family::GaussDeg2, 2));
    CHECK(crosscheck(Family::EisDeg2, 2));
    CHECK_THROWS_AS(crosscheck(Family::EisDeg2, 9), DomainError);
    CHECK_THROWS_AS(crosscheck(Family::EisDeg2, 0), DomainError);
    std::vector<CrosscheckResult> checks{crosscheck_detail(Family::EisDeg2, 2)};
    CHECK(emit_series_csv(series(Family::EisDeg2, 2), &checks) == "n,delta,surfaces,crosscheck\r\n1,0,,\r\n2,1,1,pass\r\n");
}
