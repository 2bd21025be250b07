#pragma once

// Branch data of sphere covers over the three-punctured sphere: nonnegative
// solutions of the Riemann-Hurwitz relations
//
//   E family: sum_{i=1..5} (6-i) k_i = 12 - 3 m1 - 4 n1
//   G family: sum_{i=1..3} (4-i) k_i =  8 - 2 m1 - 3 n1 - 2 n2
//
// k6 (E) and k4 (G) have weight zero and are left free: every row stands for
// an infinite family.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlat {

enum class Problem { E, G, Eprime, Gprime };

bool is_eisenstein_family(Problem p);
/// Number of stored k entries: 5 for the E family, 3 for the G family.
int k_count(Problem p);
std::string_view problem_name(Problem p);
Problem parse_problem(std::string_view name);

struct BranchData {
    Problem problem = Problem::E;
    int m1 = 0;
    int n1 = 0;
    int n2 = 0;
    std::vector<int> k; ///< k[0] = k_1, ...

    bool operator==(const BranchData&) const = default;
};

/// Right-hand side of the relation for the given unramified counts.
int branch_rhs(Problem p, int m1, int n1, int n2);
/// Left-hand side sum of weighted k entries, evaluated directly.
int branch_lhs(Problem p, std::span<const int> k);

/// All solutions for one (m1, n1, n2) block, sorted descending by
/// (k5, ..., k1) or (k3, k2, k1). Empty when the right-hand side is negative.
/// Throws DomainError for n2 != 0 in the E family, for nonzero unramified
/// counts in E or G, and for negative counts.
std::vector<BranchData> enum_branch(Problem p, int m1, int n1, int n2);

/// Every block with a nonnegative right-hand side. For E and G that is the
/// single block (0,0,0); for the primed problems it is every block with at
/// least one nonzero unramified count, ordered ascending by (m1, n1, n2).
/// Blocks are enumerated on up to `jobs` threads; output order is fixed.
std::vector<BranchData> enum_all_blocks(Problem p, unsigned jobs = 1);

int dim_of(const BranchData& b);
int fiber_count(const BranchData& b); ///< sum of stored k_i

struct DegreeInfo {
    int degree = 0;        ///< sum i k_i with the free k6 / k4 set to zero
    bool feasible = false; ///< the covering relations admit nonnegative integer m2, n3 (or n4)
    int m2 = 0;
    int n_top = 0;         ///< n3 for the E family, n4 for the G family
};

DegreeInfo degree_of(const BranchData& b);

/// Rows with at least `min_fibers` points over infinity (stored k only).
std::vector<BranchData> fiber_filter(std::span<const BranchData> rows, int min_fibers);
/// Rows with at least five points over infinity.
std::vector<BranchData> starred_filter(std::span<const BranchData> rows);

enum class TableFormat { Csv, Markdown };
TableFormat parse_table_format(std::string_view name);

/// Byte-exact table. CSV uses CRLF line endings; markdown uses LF.
std::string emit_table(std::span<const BranchData> rows, Problem p, TableFormat format);

/// A row of a published table: the k-vector and block as printed, plus its dim column.
struct ReferenceRow {
    int line = 0; ///< 1-based line in the source file
    BranchData data;
    std::optional<int> dim;
};

/// Reads a CSV with a header naming at least m1, n1, k1..kN (n2, dim and any
/// other columns optional). Throws ParseError with line diagnostics.
std::vector<ReferenceRow> parse_reference_table(std::string_view csv, Problem p);

struct TableCheck {
    std::vector<ReferenceRow> matched;
    std::vector<std::pair<ReferenceRow, int>> violating;  ///< with their actual lhs
    std::vector<ReferenceRow> dim_mismatch;               ///< satisfies the relation, wrong dim column
    std::vector<ReferenceRow> duplicates;
    std::vector<BranchData> missing;                      ///< enumerated but absent from the table
    bool clean() const { return violating.empty() && dim_mismatch.empty() && duplicates.empty() && missing.empty(); }
};

/// Compares a published table with the enumeration of the blocks it mentions.
TableCheck check_reference_table(std::span<const ReferenceRow> reference, Problem p);

std::string format_table_check(const TableCheck& check, Problem p);

} // namespace hyperlat
