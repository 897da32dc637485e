#include "nodal/feasibility.hpp"

#include <charconv>

#include "nodal/error.hpp"

namespace nodal {

namespace {

void check_ranks(std::int64_t r, std::int64_t k) {
    // GluingDatum validates r >= 2 and 1 <= k <= r.
    (void)GluingDatum(r, k, 0, 0);
}

RationalInterval unit_open() { return RationalInterval::open(Rational(0), Rational(1)); }

} // namespace

const char* describe(NecessaryCondition c) {
    switch (c) {
    case NecessaryCondition::chi1_lower: return "chi*w1 <= chi1";
    case NecessaryCondition::chi1_upper: return "chi1 <= chi*w1 + k";
    case NecessaryCondition::chi2_lower: return "chi*w2 + r - k <= chi2";
    case NecessaryCondition::chi2_upper: return "chi2 <= chi*w2 + r";
    }
    return "?";
}

std::optional<NecessaryCondition> violated_condition(const GluingDatum& u, const Polarization& w) {
    const Rational chi(u.total_chi());
    const Rational chi1(u.chi1()), chi2(u.chi2()), r(u.r()), k(u.k());
    const Rational a1 = chi * w.w1();
    const Rational a2 = chi * w.w2();

    if (!(a1 <= chi1)) return NecessaryCondition::chi1_lower;
    if (!(chi1 <= a1 + k)) return NecessaryCondition::chi1_upper;
    if (!(a2 + r - k <= chi2)) return NecessaryCondition::chi2_lower;
    if (!(chi2 <= a2 + r)) return NecessaryCondition::chi2_upper;
    return std::nullopt;
}

bool necessary_conditions(const GluingDatum& u, const Polarization& w) { return !violated_condition(u, w); }

/*
 * Dividing the chi1 inequalities by chi gives the w1 window
 *   chi > 0:  (chi1 - k)/chi <= w1 <= chi1/chi
 *   chi < 0:  chi1/chi <= w1 <= (chi1 - k)/chi
 * The chi2 inequalities reduce to the same window after w2 = 1 - w1 and
 * chi2 = chi - chi1 + r. At chi = 0 nothing depends on w and all four
 * inequalities collapse to 0 <= chi1 <= k.
 */
FeasibilityReport feasible_interval(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2) {
    const GluingDatum u(r, k, chi1, chi2);
    FeasibilityReport report;
    report.chi = u.total_chi();

    if (report.chi == 0) {
        report.w1_interval = (0 <= chi1 && chi1 <= k) ? unit_open() : RationalInterval::empty();
    } else {
        const Rational chi(report.chi);
        Rational lo = (Rational(chi1) - Rational(k)) / chi;
        Rational hi = Rational(chi1) / chi;
        if (report.chi < 0) std::swap(lo, hi);
        report.w1_interval = intersect(RationalInterval::closed(lo, hi), unit_open());
    }

    report.feasible = !report.w1_interval.is_empty();
    if (auto w1 = sample(report.w1_interval)) report.sample = Polarization::from_w1(*w1);
    return report;
}

bool in_region(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2) {
    return feasible_interval(r, k, chi1, chi2).feasible;
}

AllRanksReport in_region_all_k(std::int64_t r, std::int64_t chi1, std::int64_t chi2) {
    check_ranks(r, 1);
    AllRanksReport out;
    out.w1_interval = unit_open();
    for (std::int64_t k = 1; k <= r; ++k)
        out.w1_interval = intersect(out.w1_interval, feasible_interval(r, k, chi1, chi2).w1_interval);
    out.member = !out.w1_interval.is_empty();
    if (auto w1 = sample(out.w1_interval)) out.sample = Polarization::from_w1(*w1);
    return out;
}

std::uint64_t IntRange::size() const {
    if (empty()) return 0;
    return static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
}

IntRange IntRange::parse(const std::string& text) {
    // The separator is the first ':' not at position 0 so "-3:-1" parses.
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw ParseError("malformed range '" + text + "', expected lo:hi");
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size() || s.empty())
            throw ParseError("malformed range '" + text + "', expected lo:hi");
        return v;
    };
    const std::string_view sv(text);
    return IntRange{parse_int(sv.substr(0, colon)), parse_int(sv.substr(colon + 1))};
}

std::vector<RegionRow> region_scan(std::int64_t r, std::int64_t k, IntRange chi1_range, IntRange chi2_range) {
    check_ranks(r, k);
    std::vector<RegionRow> rows;
    if (chi1_range.empty() || chi2_range.empty()) return rows;
    rows.reserve(chi1_range.size() * chi2_range.size());
    for (std::int64_t c1 = chi1_range.lo;; ++c1) {
        for (std::int64_t c2 = chi2_range.lo;; ++c2) {
            auto rep = feasible_interval(r, k, c1, c2);
            rows.push_back(RegionRow{c1, c2, rep.feasible, rep.w1_interval});
            if (c2 == chi2_range.hi) break;
        }
        if (c1 == chi1_range.hi) break;
    }
    return rows;
}

} // namespace nodal
