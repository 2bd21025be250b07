#include "hyperlat/branch.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

struct Block {
    int m1, n1, n2;
};

// Weights in sort-key order: the key runs from the highest k index down to k1,
// and the weight of k_i is (6 - i) or (4 - i).
std::vector<int> key_weights(Problem p)
{
    return is_eisenstein_family(p) ? std::vector<int>{1, 2, 3, 4, 5} : std::vector<int>{1, 2, 3};
}

void enumerate_into(Problem p, const Block& blk, int rhs, std::optional<int> top, std::vector<BranchData>& out)
{
    const std::vector<int> w = key_weights(p);
    const int n = static_cast<int>(w.size());
    std::vector<int> key(n, 0);

    auto emit = [&] {
        BranchData b{p, blk.m1, blk.n1, blk.n2, std::vector<int>(n)};
        for (int j = 0; j < n; ++j) b.k[n - 1 - j] = key[j];
        out.push_back(std::move(b));
    };
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == n - 1) {
            if (remaining % w[idx] == 0) {
                key[idx] = remaining / w[idx];
                emit();
            }
            return;
        }
        int hi = remaining / w[idx];
        int lo = 0;
        if (idx == 0 && top) hi = lo = *top;
        for (int v = hi; v >= lo; --v) {
            key[idx] = v;
            self(self, idx + 1, remaining - v * w[idx]);
        }
    };
    if (top && *top * w[0] > rhs) return;
    rec(rec, 0, rhs);
}

void validate_block(Problem p, int m1, int n1, int n2)
{
    if (m1 < 0 || n1 < 0 || n2 < 0) throw DomainError("unramified point counts must be nonnegative");
    if (is_eisenstein_family(p) && n2 != 0) throw DomainError("n2 applies to the Gaussian family only");
    if ((p == Problem::E || p == Problem::G) && (m1 != 0 || n1 != 0 || n2 != 0))
        throw DomainError(std::string(problem_name(p)) + " has no unramified points; use the primed problem");
}

std::vector<Block> blocks_of(Problem p)
{
    if (p == Problem::E || p == Problem::G) return {{0, 0, 0}};
    std::vector<Block> out;
    const bool eis = is_eisenstein_family(p);
    for (int m1 = 0; m1 <= 12; ++m1)
        for (int n1 = 0; n1 <= 12; ++n1)
            for (int n2 = 0; n2 <= (eis ? 0 : 12); ++n2) {
                if (m1 == 0 && n1 == 0 && n2 == 0) continue;
                if (branch_rhs(p, m1, n1, n2) >= 0) out.push_back({m1, n1, n2});
            }
    return out;
}

std::string k_text(const BranchData& b)
{
    std::string s = "(";
    for (std::size_t i = 0; i < b.k.size(); ++i) s += (i ? "," : "") + std::to_string(b.k[i]);
    return s + ")";
}

std::string block_text(const BranchData& b)
{
    std::string s = "m1=" + std::to_string(b.m1) + " n1=" + std::to_string(b.n1);
    if (!is_eisenstein_family(b.problem)) s += " n2=" + std::to_string(b.n2);
    return s;
}

} // namespace

bool is_eisenstein_family(Problem p) { return p == Problem::E || p == Problem::Eprime; }

int k_count(Problem p) { return is_eisenstein_family(p) ? 5 : 3; }

std::string_view problem_name(Problem p)
{
    switch (p) {
    case Problem::E: return "E";
    case Problem::G: return "G";
    case Problem::Eprime: return "Eprime";
    case Problem::Gprime: return "Gprime";
    }
    return "?";
}

Problem parse_problem(std::string_view name)
{
    if (name == "E") return Problem::E;
    if (name == "G") return Problem::G;
    if (name == "Eprime") return Problem::Eprime;
    if (name == "Gprime") return Problem::Gprime;
    throw ParseError("unknown problem '" + std::string(name) + "' (expected E, G, Eprime or Gprime)");
}

int branch_rhs(Problem p, int m1, int n1, int n2)
{
    return is_eisenstein_family(p) ? 12 - 3 * m1 - 4 * n1 : 8 - 2 * m1 - 3 * n1 - 2 * n2;
}

int branch_lhs(Problem p, std::span<const int> k)
{
    const int top = is_eisenstein_family(p) ? 6 : 4;
    int s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += (top - static_cast<int>(i + 1)) * k[i];
    return s;
}

std::vector<BranchData> enum_branch(Problem p, int m1, int n1, int n2)
{
    validate_block(p, m1, n1, n2);
    std::vector<BranchData> out;
    const int rhs = branch_rhs(p, m1, n1, n2);
    if (rhs < 0) return out;
    enumerate_into(p, {m1, n1, n2}, rhs, std::nullopt, out);
    return out;
}

std::vector<BranchData> enum_all_blocks(Problem p, unsigned jobs)
{
    // One task per (block, leading key value); tasks are merged in order.
    struct Task {
        Block blk;
        int rhs;
        int top;
    };
    std::vector<Task> tasks;
    for (const Block& blk : blocks_of(p)) {
        const int rhs = branch_rhs(p, blk.m1, blk.n1, blk.n2);
        for (int top = rhs; top >= 0; --top) tasks.push_back({blk, rhs, top});
    }
    std::vector<std::vector<BranchData>> results(tasks.size());
    auto run = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < tasks.size(); t += stride)
            enumerate_into(p, tasks[t].blk, tasks[t].rhs, tasks[t].top, results[t]);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        run(0, 1);
    } else {
        std::vector<std::future<void>> futures;
        for (unsigned j = 0; j < jobs; ++j) futures.push_back(std::async(std::launch::async, run, j, jobs));
        for (auto& f : futures) f.get();
    }
    std::vector<BranchData> out;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

int fiber_count(const BranchData& b)
{
    int s = 0;
    for (int v : b.k) s += v;
    return s;
}

int dim_of(const BranchData& b) { return fiber_count(b) - 3; }

DegreeInfo degree_of(const BranchData& b)
{
    DegreeInfo info;
    for (std::size_t i = 0; i < b.k.size(); ++i) info.degree += static_cast<int>(i + 1) * b.k[i];
    const int d = info.degree;
    // m1 + 2 m2 = d over 0; over 1: n1 + 3 n3 = d (E) or n1 + 2 n2 + 4 n4 = d (G).
    const int rest0 = d - b.m1;
    const int rest1 = is_eisenstein_family(b.problem) ? d - b.n1 : d - b.n1 - 2 * b.n2;
    const int div1 = is_eisenstein_family(b.problem) ? 3 : 4;
    info.feasible = rest0 >= 0 && rest0 % 2 == 0 && rest1 >= 0 && rest1 % div1 == 0;
    if (info.feasible) {
        info.m2 = rest0 / 2;
        info.n_top = rest1 / div1;
    }
    return info;
}

std::vector<BranchData> fiber_filter(std::span<const BranchData> rows, int min_fibers)
{
    std::vector<BranchData> out;
    for (const auto& r : rows)
        if (fiber_count(r) >= min_fibers) out.push_back(r);
    return out;
}

std::vector<BranchData> starred_filter(std::span<const BranchData> rows) { return fiber_filter(rows, 5); }

TableFormat parse_table_format(std::string_view name)
{
    if (name == "csv") return TableFormat::Csv;
    if (name == "markdown" || name == "md") return TableFormat::Markdown;
    throw ParseError("unknown table format '" + std::string(name) + "' (expected csv or markdown)");
}

std::string emit_table(std::span<const BranchData> rows, Problem p, TableFormat format)
{
    std::vector<std::string> header{"problem", "m1", "n1", "n2"};
    for (int i = 1; i <= k_count(p); ++i) header.push_back("k" + std::to_string(i));
    header.insert(header.end(), {"dim", "min_degree", "feasible"});

    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows) {
        if (static_cast<int>(r.k.size()) != k_count(p) || is_eisenstein_family(r.problem) != is_eisenstein_family(p))
            throw DomainError("emit_table: row family does not match the table family");
        const DegreeInfo deg = degree_of(r);
        std::vector<std::string> cells{std::string(problem_name(r.problem)), std::to_string(r.m1),
                                       std::to_string(r.n1), std::to_string(r.n2)};
        for (int v : r.k) cells.push_back(std::to_string(v));
        cells.push_back(std::to_string(dim_of(r)));
        cells.push_back(std::to_string(deg.degree));
        cells.push_back(deg.feasible ? "true" : "false");
        body.push_back(std::move(cells));
    }

    std::string out;
    auto join = [](const std::vector<std::string>& cells, std::string_view sep) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += sep;
            s += cells[i];
        }
        return s;
    };
    if (format == TableFormat::Csv) {
        out += join(header, ",") + "\r\n";
        for (const auto& row : body) out += join(row, ",") + "\r\n";
    } else {
        out += "| " + join(header, " | ") + " |\n";
        out += "|";
        for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
        out += "\n";
        for (const auto& row : body) out += "| " + join(row, " | ") + " |\n";
    }
    return out;
}

std::vector<ReferenceRow> parse_reference_table(std::string_view csv, Problem p)
{
    std::vector<ReferenceRow> out;
    std::map<std::string, std::size_t> col;
    bool have_header = false;
    int line_no = 0;
    std::size_t pos = 0;

    auto split = [](std::string_view line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            std::string cell(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            cell.erase(0, cell.find_first_not_of(" \t"));
            cell.erase(cell.find_last_not_of(" \t") + 1);
            cells.push_back(cell);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return cells;
    };
    auto to_int = [&](const std::string& s, const std::string& field) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("line " + std::to_string(line_no) + ": field '" + field + "': expected integer, got '" + s + "'");
        return v;
    };

    while (pos <= csv.size()) {
        auto nl = csv.find('\n', pos);
        std::string_view line = csv.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        auto cells = split(line);
        if (!have_header) {
            for (std::size_t i = 0; i < cells.size(); ++i) col[cells[i]] = i;
            std::vector<std::string> required{"m1", "n1"};
            for (int i = 1; i <= k_count(p); ++i) required.push_back("k" + std::to_string(i));
            for (const auto& r : required)
                if (!col.count(r)) throw ParseError("line " + std::to_string(line_no) + ": header lacks column '" + r + "'");
            have_header = true;
            continue;
        }
        auto field = [&](const std::string& name) -> const std::string& {
            const std::size_t i = col.at(name);
            if (i >= cells.size())
                throw ParseError("line " + std::to_string(line_no) + ": missing field '" + name + "'");
            return cells[i];
        };
        ReferenceRow row;
        row.line = line_no;
        row.data.problem = p;
        if (col.count("problem") && parse_problem(field("problem")) != p)
            throw ParseError("line " + std::to_string(line_no) + ": problem column does not match " +
                             std::string(problem_name(p)));
        row.data.m1 = to_int(field("m1"), "m1");
        row.data.n1 = to_int(field("n1"), "n1");
        row.data.n2 = col.count("n2") ? to_int(field("n2"), "n2") : 0;
        for (int i = 1; i <= k_count(p); ++i) {
            const std::string name = "k" + std::to_string(i);
            row.data.k.push_back(to_int(field(name), name));
        }
        if (col.count("dim") && !field("dim").empty()) row.dim = to_int(field("dim"), "dim");
        out.push_back(std::move(row));
    }
    if (!have_header) throw ParseError("reference table is empty (no header line)");
    return out;
}

TableCheck check_reference_table(std::span<const ReferenceRow> reference, Problem p)
{
    TableCheck check;
    std::set<std::tuple<int, int, int>> blocks;
    std::set<std::tuple<int, int, int, std::vector<int>>> seen;
    for (const auto& row : reference) {
        const auto& b = row.data;
        blocks.insert({b.m1, b.n1, b.n2});
        if (!seen.insert({b.m1, b.n1, b.n2, b.k}).second) {
            check.duplicates.push_back(row);
            continue;
        }
        const int lhs = branch_lhs(p, b.k);
        const bool nonneg = std::all_of(b.k.begin(), b.k.end(), [](int v) { return v >= 0; });
        if (!nonneg || lhs != branch_rhs(p, b.m1, b.n1, b.n2)) {
            check.violating.push_back({row, lhs});
        } else if (row.dim && *row.dim != dim_of(b)) {
            check.dim_mismatch.push_back(row);
        } else {
            check.matched.push_back(row);
        }
    }
    for (const auto& [m1, n1, n2] : blocks) {
        for (auto& sol : enum_branch(p, m1, n1, n2))
            if (!seen.count({m1, n1, n2, sol.k})) check.missing.push_back(std::move(sol));
    }
    return check;
}

std::string format_table_check(const TableCheck& check, Problem p)
{
    std::ostringstream os;
    const std::size_t total = check.matched.size() + check.violating.size() + check.dim_mismatch.size() +
                              check.duplicates.size();
    os << "reference rows: " << total << "\n";
    os << "matched: " << check.matched.size() << "\n";
    os << "violating relation: " << check.violating.size() << "\n";
    for (const auto& [row, lhs] : check.violating)
        os << "  line " << row.line << ": " << block_text(row.data) << " k=" << k_text(row.data) << ": lhs " << lhs
           << " != rhs " << branch_rhs(p, row.data.m1, row.data.n1, row.data.n2) << "\n";
    os << "dim column mismatches: " << check.dim_mismatch.size() << "\n";
    for (const auto& row : check.dim_mismatch)
        os << "  line " << row.line << ": " << block_text(row.data) << " k=" << k_text(row.data) << ": dim "
           << *row.dim << " != " << dim_of(row.data) << "\n";
    os << "duplicate rows: " << check.duplicates.size() << "\n";
    for (const auto& row : check.duplicates)
        os << "  line " << row.line << ": " << block_text(row.data) << " k=" << k_text(row.data) << "\n";
    os << "enumerated solutions absent from reference: " << check.missing.size() << "\n";
    for (const auto& b : check.missing)
        os << "  " << block_text(b) << " k=" << k_text(b) << " dim " << dim_of(b) << "\n";
    os << "status: " << (check.clean() ? "CLEAN" : "DISCREPANCIES") << "\n";
    return os.str();
}

} // namespace hyperlat
