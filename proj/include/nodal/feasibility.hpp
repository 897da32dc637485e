#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodal/curve.hpp"
#include "nodal/exact.hpp"
#include "nodal/gluing.hpp"

namespace nodal {

/*
 * The four inequalities a w-semistable glued sheaf must satisfy, with
 * chi = chi1 + chi2 - r:
 *
 *   chi1_lower:  chi * w1           <= chi1
 *   chi1_upper:  chi1               <= chi * w1 + k
 *   chi2_lower:  chi * w2 + r - k   <= chi2
 *   chi2_upper:  chi2               <= chi * w2 + r
 */
enum class NecessaryCondition { chi1_lower, chi1_upper, chi2_lower, chi2_upper };

const char* describe(NecessaryCondition c);

// First violated inequality in the order above, or nullopt if all hold.
std::optional<NecessaryCondition> violated_condition(const GluingDatum& u, const Polarization& w);

bool necessary_conditions(const GluingDatum& u, const Polarization& w);

struct FeasibilityReport {
    bool feasible = false;
    // Set of admissible w1, already intersected with (0, 1).
    RationalInterval w1_interval = RationalInterval::empty();
    std::optional<Polarization> sample;
    std::int64_t chi = 0;
};

// Exact set of w1 for which the necessary conditions hold. Throws
// InvalidArgument unless r >= 2 and 1 <= k <= r.
FeasibilityReport feasible_interval(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2);

// Membership of (chi1, chi2) in the region W_{r,k}.
bool in_region(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2);

struct AllRanksReport {
    bool member = false;
    // Intersection over k = 1..r of the w1-intervals.
    RationalInterval w1_interval = RationalInterval::empty();
    // One polarization that works for every k at once.
    std::optional<Polarization> sample;
};

// Membership in W_r, the intersection of W_{r,k} over 1 <= k <= r, which
// coincides with W_{r,1}.
AllRanksReport in_region_all_k(std::int64_t r, std::int64_t chi1, std::int64_t chi2);

// Closed integer range [lo, hi]; lo > hi means empty.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
    std::uint64_t size() const;
    // Parses "lo:hi".
    static IntRange parse(const std::string& text);
};

struct RegionRow {
    std::int64_t chi1;
    std::int64_t chi2;
    bool feasible;
    RationalInterval w1_interval;
};

// One row per lattice point, chi1 major, chi2 minor, both ascending.
std::vector<RegionRow> region_scan(std::int64_t r, std::int64_t k, IntRange chi1_range, IntRange chi2_range);

} // namespace nodal
