#pragma once

// Isomer counts: the number of members of a family with exactly n cells,
// counted on the lattice side as orbit representatives and cross-checked
// against exhaustive enumeration of small sphere maps.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperlat/builder.hpp"

namespace hyperlat {

inline constexpr int kDefaultCountBudget = 96;

/// Largest cell count series/delta_n accept: HYPERLAT_BUDGET if set to a
/// positive integer, otherwise kDefaultCountBudget.
int count_budget();

/// Canonical lattice points (canonical_unit_rep or pair_reduce output) of every
/// cell count 1..n_max, in their text form, sorted. Throws BudgetError above the budget.
std::map<int, std::vector<std::string>> canonical_points(Family f, int n_max, int jobs = 1);

std::int64_t delta_n(Family f, int n, int jobs = 1);

struct CountSeries {
    Family family = Family::EisDeg2;
    std::vector<std::pair<int, std::int64_t>> entries; ///< (n, delta) for n = 1..n_max
};

CountSeries series(Family f, int n_max, int jobs = 1);

struct CrosscheckResult {
    int n = 0;
    std::int64_t lattice = 0;  ///< delta_n
    std::int64_t surfaces = 0; ///< classes from enumerate_small_maps
    bool labels_match = false; ///< built maps are exactly the enumerated classes
    bool ok() const { return lattice == surfaces && labels_match; }
};

/// Requires 1 <= n <= kSmallMapFaceLimit.
CrosscheckResult crosscheck_detail(Family f, int n);
bool crosscheck(Family f, int n);

/// "n,delta" CSV (CRLF), with a trailing crosscheck column when given.
std::string emit_series_csv(const CountSeries& s, const std::vector<CrosscheckResult>* checks = nullptr);

} // namespace hyperlat
