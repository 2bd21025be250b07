#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperlat/branch.hpp"
#include "hyperlat/errors.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hyperlat;

namespace {

std::vector<int> weights(Problem p) { return is_eisenstein_family(p) ? std::vector<int>{5, 4, 3, 2, 1} : std::vector<int>{3, 2, 1}; }

std::set<std::vector<int>> kset(const std::vector<BranchData>& rows)
{
    std::set<std::vector<int>> out;
    for (const auto& r : rows) out.insert(r.k);
    return out;
}

} // namespace

TEST_CASE("problem G reproduces the Gaussian table")
{
    const auto rows = enum_branch(Problem::G, 0, 0, 0);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front().k == std::vector<int>{0, 0, 8});
    CHECK(dim_of(rows.front()) == 5);
    CHECK(rows.back().k == std::vector<int>{2, 1, 0});
    CHECK(dim_of(rows.back()) == 0);
    const auto reference = parse_reference_table(support::read_data("published_G.csv"), Problem::G);
    CHECK(reference.size() == 10);
    CHECK(check_reference_table(reference, Problem::G).clean());
}

TEST_CASE("problem E has 47 solutions")
{
    CHECK(enum_branch(Problem::E, 0, 0, 0).size() == 47);
    CHECK(oracle::weighted_solutions(12, {1, 2, 3, 4, 5}) == 47);
    CHECK(enum_branch(Problem::Eprime, 1, 0, 0).size() == 23);
    const auto g1 = enum_branch(Problem::Gprime, 1, 0, 0);
    const std::vector<std::vector<int>> expected{{0, 0, 6}, {0, 1, 4}, {1, 0, 3}, {0, 2, 2}, {1, 1, 1}, {0, 3, 0}, {2, 0, 0}};
    REQUIRE(g1.size() == expected.size());
    CHECK(kset(g1) == std::set<std::vector<int>>(expected.begin(), expected.end()));
}

TEST_CASE("block sizes agree with the partition oracle")
{
    for (Problem p : {Problem::E, Problem::G, Problem::Eprime, Problem::Gprime}) {
        const int max_n2 = p == Problem::Gprime ? 5 : 0;
        for (int m1 = 0; m1 <= 6; ++m1)
            for (int n1 = 0; n1 <= 4; ++n1)
                for (int n2 = 0; n2 <= max_n2; ++n2) {
                    const bool plain = p == Problem::E || p == Problem::G;
                    if (plain && (m1 || n1 || n2)) continue;
                    const int rhs = branch_rhs(p, m1, n1, n2);
                    const auto rows = enum_branch(p, m1, n1, n2);
                    CHECK(static_cast<std::int64_t>(rows.size()) == oracle::weighted_solutions(rhs, weights(p)));
                    for (const auto& r : rows) {
                        // independent evaluation of the relation
                        int lhs = 0;
                        const int top = is_eisenstein_family(p) ? 6 : 4;
                        for (std::size_t i = 0; i < r.k.size(); ++i) lhs += (top - static_cast<int>(i) - 1) * r.k[i];
                        CHECK(lhs == rhs);
                    }
                    CHECK(kset(rows).size() == rows.size());
                }
    }
}

TEST_CASE("rows are sorted descending from the top k")
{
    for (Problem p : {Problem::E, Problem::G}) {
        const auto rows = enum_branch(p, 0, 0, 0);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            auto a = rows[i - 1].k, b = rows[i].k;
            std::reverse(a.begin(), a.end());
            std::reverse(b.begin(), b.end());
            CHECK(a > b);
        }
    }
}

TEST_CASE("enumeration errors and empty blocks")
{
    CHECK_THROWS_AS(enum_branch(Problem::Eprime, 1, 0, 1), DomainError);
    CHECK_THROWS_AS(enum_branch(Problem::E, 1, 0, 0), DomainError);
    CHECK_THROWS_AS(enum_branch(Problem::Gprime, -1, 0, 0), DomainError);
    CHECK(enum_branch(Problem::Eprime, 5, 0, 0).empty());
    CHECK(enum_branch(Problem::Gprime, 0, 3, 0).empty());
    CHECK(enum_branch(Problem::Eprime, 4, 0, 0).size() == 1);
    CHECK_THROWS_AS(parse_problem("F"), ParseError);
    CHECK(parse_problem("Gprime") == Problem::Gprime);
}

TEST_CASE("dim, degree and fibers")
{
    BranchData e{Problem::E, 0, 0, 0, {0, 0, 0, 0, 12}};
    CHECK(dim_of(e) == 9);
    CHECK(fiber_count(e) == 12);
    const auto de = degree_of(e);
    CHECK(de.degree == 60);
    CHECK(de.feasible);
    CHECK(de.m2 == 30);
    CHECK(de.n_top == 20);

    BranchData ep{Problem::Eprime, 1, 0, 0, {0, 0, 0, 0, 9}};
    CHECK(degree_of(ep).degree == 45);
    CHECK(degree_of(ep).feasible);
    CHECK(degree_of(ep).m2 == 22);

    BranchData g{Problem::G, 0, 0, 0, {0, 0, 8}};
    CHECK(dim_of(g) == 5);
    CHECK(degree_of(g).degree == 24);
    CHECK(degree_of(g).feasible);
    CHECK(degree_of(g).n_top == 6);

    CHECK(dim_of(BranchData{Problem::G, 0, 0, 0, {0, 0, 0}}) == -3);
    // E' rows fail only when every k is zero (degree 0 cannot host the unramified
    // points); G' blocks with m1 + n1 odd never work.
    for (const auto& r : enum_all_blocks(Problem::Eprime)) CHECK(degree_of(r).feasible == (fiber_count(r) > 0));
    for (const auto& r : enum_all_blocks(Problem::Gprime)) {
        const int d = degree_of(r).degree;
        CHECK(degree_of(r).feasible == ((r.m1 + r.n1) % 2 == 0 && d >= r.m1 && d >= r.n1 + 2 * r.n2));
    }
}

TEST_CASE("starred rows of the E' relaxation")
{
    const auto pooled = enum_all_blocks(Problem::Eprime);
    const auto starred = starred_filter(pooled);
    CHECK(starred.size() == 22);
    std::map<std::pair<int, int>, int> blocks;
    for (const auto& r : starred) ++blocks[{r.m1, r.n1}];
    CHECK(blocks[{1, 0}] == 12);
    CHECK(blocks[{2, 0}] == 2);
    CHECK(blocks[{0, 1}] == 7);
    CHECK(blocks[{1, 1}] == 1);
    CHECK(blocks.size() == 4);
    for (const auto& r : starred) CHECK(dim_of(r) >= 2);
    CHECK(starred_filter(enum_branch(Problem::G, 0, 0, 0)).size() == 6);
    CHECK(starred_filter(std::vector<BranchData>{}).empty());

    // The published asterisks mark the same 22 rows.
    const auto reference = parse_reference_table(support::read_data("published_Eprime.csv"), Problem::Eprime);
    std::set<std::tuple<int, int, std::vector<int>>> marked;
    const auto text = support::read_data("published_Eprime.csv");
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'm') continue;
        std::vector<int> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(std::stoi(c));
        if (cells[8] == 1) marked.insert({cells[0], cells[1], {cells.begin() + 2, cells.begin() + 7}});
    }
    std::set<std::tuple<int, int, std::vector<int>>> ours;
    for (const auto& r : starred) ours.insert({r.m1, r.n1, r.k});
    CHECK(marked == ours);
}

TEST_CASE("pooled blocks are ordered and independent of job count")
{
    for (Problem p : {Problem::Eprime, Problem::Gprime}) {
        const auto one = enum_all_blocks(p, 1);
        const auto many = enum_all_blocks(p, 8);
        CHECK(one == many);
        CHECK(emit_table(one, p, TableFormat::Csv) == emit_table(many, p, TableFormat::Csv));
        for (std::size_t i = 1; i < one.size(); ++i) {
            const auto a = std::tuple(one[i - 1].m1, one[i - 1].n1, one[i - 1].n2);
            const auto b = std::tuple(one[i].m1, one[i].n1, one[i].n2);
            CHECK(a <= b);
        }
        for (const auto& r : one) CHECK((r.m1 + r.n1 + r.n2) > 0);
    }
    CHECK(enum_all_blocks(Problem::G) == enum_branch(Problem::G, 0, 0, 0));
}

TEST_CASE("table output")
{
    const auto rows = enum_branch(Problem::G, 0, 0, 0);
    const auto csv = emit_table(rows, Problem::G, TableFormat::Csv);
    CHECK(csv.rfind("problem,m1,n1,n2,k1,k2,k3,dim,min_degree,feasible\r\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
    CHECK(std::count(csv.begin(), csv.end(), '\r') == 11);
    CHECK(csv.find("G,0,0,0,0,0,8,5,24,true\r\n") != std::string::npos);
    CHECK(csv == support::read_data("golden/enum_G.csv"));

    const auto md = emit_table(rows, Problem::G, TableFormat::Markdown);
    CHECK(std::count(md.begin(), md.end(), '\n') == 12);
    CHECK(md.find('\r') == std::string::npos);

    const std::vector<BranchData> one{rows.front()};
    const auto single = emit_table(one, Problem::G, TableFormat::Csv);
    CHECK(std::count(single.begin(), single.end(), '\n') == 2);
    const auto empty = emit_table(std::vector<BranchData>{}, Problem::E, TableFormat::Csv);
    CHECK(empty == "problem,m1,n1,n2,k1,k2,k3,k4,k5,dim,min_degree,feasible\r\n");

    CHECK(emit_table(enum_branch(Problem::E, 0, 0, 0), Problem::E, TableFormat::Csv) ==
          emit_table(enum_branch(Problem::E, 0, 0, 0), Problem::E, TableFormat::Csv));
    CHECK_THROWS_AS(parse_table_format("xml"), ParseError);
}

TEST_CASE("published E table against the enumeration")
{
    const auto reference = parse_reference_table(support::read_data("published_E.csv"), Problem::E);
    REQUIRE(reference.size() == 46);
    const auto check = check_reference_table(reference, Problem::E);
    CHECK(check.matched.size() == 43);
    REQUIRE(check.violating.size() == 3);
    std::set<std::pair<std::vector<int>, int>> bad;
    for (const auto& [row, lhs] : check.violating) bad.insert({row.data.k, lhs});
    CHECK(bad.count({{2, 0, 0, 0, 1}, 11}) == 1);
    CHECK(bad.count({{0, 2, 0, 3, 2}, 16}) == 1);
    CHECK(bad.count({{1, 0, 2, 0, 2}, 13}) == 1);
    CHECK(check.missing.size() == 4);
    CHECK(check.dim_mismatch.empty());
    CHECK_FALSE(check.clean());
    const auto report = format_table_check(check, Problem::E);
    CHECK(report.find("status: DISCREPANCIES") != std::string::npos);
    CHECK(report.find("k=(2,0,0,0,1): lhs 11") != std::string::npos);
}

TEST_CASE("published E' table against the enumeration")
{
    const auto reference = parse_reference_table(support::read_data("published_Eprime.csv"), Problem::Eprime);
    CHECK(reference.size() == 65);
    const auto check = check_reference_table(reference, Problem::Eprime);
    CHECK(check.violating.size() == 3);
    CHECK(check.matched.size() == 62);
    CHECK(check.duplicates.empty());
    CHECK(check.dim_mismatch.empty());
    // (1,0) with k=(0,0,3,0,0) is a solution the table leaves out.
    const BranchData omitted{Problem::Eprime, 1, 0, 0, {0, 0, 3, 0, 0}};
    CHECK(std::find(check.missing.begin(), check.missing.end(), omitted) != check.missing.end());
    for (const auto& m : check.missing) CHECK(fiber_count(m) < 5);
}

TEST_CASE("published G' table against the enumeration")
{
    const auto reference = parse_reference_table(support::read_data("published_Gprime.csv"), Problem::Gprime);
    const auto check = check_reference_table(reference, Problem::Gprime);
    CHECK(check.missing.empty());
    // Only the three rows printed under the RHS-4 block that belong to RHS 3.
    for (const auto& [row, lhs] : check.violating) {
        CHECK(lhs == 3);
        CHECK(branch_rhs(Problem::Gprime, row.data.m1, row.data.n1, row.data.n2) == 4);
    }
    CHECK(check.violating.size() == 9);
    CHECK(check.dim_mismatch.size() == 2);
}

TEST_CASE("reference table parsing diagnostics")
{
    CHECK_THROWS_AS(parse_reference_table("k1,k2,k3\n0,0,8\n", Problem::G), ParseError);
    CHECK_THROWS_AS(parse_reference_table("m1,n1,k1,k2,k3\n0,0,x,0,8\n", Problem::G), ParseError);
    CHECK_THROWS_AS(parse_reference_table("m1,n1,k1,k2,k3\n0,0,0,8\n", Problem::G), ParseError);
    try {
        parse_reference_table("m1,n1,k1,k2,k3\n0,0,0,0,8\n0,0,y,0,8\n", Problem::G);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    const auto rows = parse_reference_table("# comment\nm1,n1,k1,k2,k3\n0,0,0,0,8\n0,0,0,0,8\n", Problem::G);
    CHECK(rows.size() == 2);
    CHECK(check_reference_table(rows, Problem::G).duplicates.size() == 1);
}
