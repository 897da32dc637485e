#pragma once

#include <cstdint>
#include <optional>

#include "nodal/curve.hpp"
#include "nodal/exact.hpp"
#include "nodal/feasibility.hpp"
#include "nodal/gluing.hpp"
#include "nodal/error.hpp"

namespace nodal {

/*
 * Discrete invariants of a subsheaf F of the glued sheaf E. At the node F
 * has stalk O_p^s + O_{q1}^a + O_{q2}^b, so its multirank is
 * (s1, s2) = (s + a, s + b). F is an extension of C_p^s by G1 + G2 where
 * Gi lives on Ci inside the kernel Ki, has rank si and degree deg_g1/deg_g2.
 */
struct SubsheafInvariant {
    std::int64_t s = 0;
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t deg_g1 = 0;
    std::int64_t deg_g2 = 0;

    friend bool operator==(const SubsheafInvariant&, const SubsheafInvariant&) = default;
};

// Gluing data plus the genera, with degrees d_i = chi_i - r (1 - g_i).
class StabilityHypotheses {
public:
    StabilityHypotheses(const NodalCurve& curve, std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2);

    const NodalCurve& curve() const { return curve_; }
    const GluingDatum& datum() const { return datum_; }
    std::int64_t r() const { return datum_.r(); }
    std::int64_t k() const { return datum_.k(); }
    std::int64_t chi1() const { return datum_.chi1(); }
    std::int64_t chi2() const { return datum_.chi2(); }
    std::int64_t g1() const { return curve_.g1(); }
    std::int64_t g2() const { return curve_.g2(); }
    std::int64_t d1() const { return d1_; }
    std::int64_t d2() const { return d2_; }

private:
    NodalCurve curve_;
    GluingDatum datum_;
    std::int64_t d1_;
    std::int64_t d2_;
};

// chi(F) / (w1 s1 + w2 s2) with chi(F) = chi(G1) + chi(G2) + s and
// chi(Gi) = deg(Gi) + si (1 - gi). Throws when s1 = s2 = 0.
Rational subsheaf_slope(const SubsheafInvariant& f, const StabilityHypotheses& h, const Polarization& w);

struct SubsheafShape {
    std::int64_t s = 0;
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
};

/*
 * Which stability hypothesis the component bundles are assumed to satisfy.
 * semistable: E1 is (0,k)-semistable and E2 is (0,r)-semistable.
 * stable:     both are stable in the same sense, so the degree bounds are strict.
 */
enum class BundleHypothesis { semistable, stable };

struct DegreeBounds {
    // Empty when the corresponding rank si is 0.
    std::optional<std::int64_t> max_deg_g1;
    std::optional<std::int64_t> max_deg_g2;
};

/*
 * Largest admissible degrees of G1, G2:
 *   deg(G1) <= s1 (d1 - k) / r      (E1 is (0,k)-semistable)
 *   deg(G2) <= s2 (d2 - 2r) / r     (E2(-q2) is (0,r)-semistable)
 * floored; under BundleHypothesis::stable the largest integer strictly below.
 */
DegreeBounds max_degree_bounds(const SubsheafShape& shape, const StabilityHypotheses& h,
                               BundleHypothesis hyp = BundleHypothesis::semistable);

// Thrown by check_sufficiency when w fails one of the necessary conditions.
class PreconditionFailed : public InvalidArgument {
public:
    explicit PreconditionFailed(NecessaryCondition c);
    NecessaryCondition condition() const { return condition_; }
    const char* kind() const noexcept override { return "precondition_failed"; }

private:
    NecessaryCondition condition_;
};

struct SufficiencyResult {
    bool holds = true;
    // First violating tuple: shapes in lexicographic (s, s1, s2) order, degrees
    // from the extremal pair downwards.
    std::optional<SubsheafInvariant> witness;
    std::uint64_t shapes_checked = 0;
};

/*
 * Checks mu_w(F) <= mu_w(E) for every admissible subsheaf shape
 * 0 <= s <= k, s <= s1, s2 <= r, (s1, s2) != (0, 0), with the degrees of G1, G2
 * set to their maximal values. Strict mode assumes BundleHypothesis::stable,
 * drops the shape (r, r) and tests mu_w(F) < mu_w(E).
 *
 * The slope is increasing in the degrees at fixed ranks, so the extremal
 * degrees decide each shape. Throws PreconditionFailed when w violates the
 * necessary conditions for h.
 */
SufficiencyResult check_sufficiency(const StabilityHypotheses& h, const Polarization& w, bool strict);

/*
 * Same check but also enumerates every degree pair within `window` below the
 * extremal one. Only useful for cross-checking the extremal reduction.
 */
SufficiencyResult check_sufficiency_window(const StabilityHypotheses& h, const Polarization& w, bool strict,
                                           std::int64_t window);

struct DegreeRank {
    std::int64_t degree = 0;
    std::int64_t rank = 1;
};

// mu_m(sub) <= mu_{m-k}(amb), or < when strict. Throws on a zero rank.
bool mk_semistable_test(DegreeRank sub, DegreeRank amb, std::int64_t m, std::int64_t k, bool strict);

// Lower bound s((g - 1)(r - s) - r) on the codimension of the locus of
// bundles that fail (0,r)-stability. Requires 1 <= s <= r - 1 and g >= 1.
std::int64_t nonstable_locus_codim_bound(std::int64_t r, std::int64_t g, std::int64_t s);

// Hypothesis under which the bound is positive for every 1 <= s <= r - 1.
inline bool codim_bound_hypothesis(std::int64_t r, std::int64_t g) { return g > r + 1; }

} // namespace nodal
