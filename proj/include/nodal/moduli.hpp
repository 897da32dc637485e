#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodal/curve.hpp"
#include "nodal/exact.hpp"

namespace nodal {

// One irreducible component of U_C(w, r, chi), keyed by (chi1, chi2).
struct ComponentRecord {
    std::int64_t chi1 = 0;
    std::int64_t chi2 = 0;
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t dimension = 0;

    friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct ComponentEnumeration {
    std::vector<ComponentRecord> records;
    // Set when some w_i * chi is an integer, i.e. w lies off the generic locus
    // and boundary values of the windows were kept.
    bool non_generic = false;
    std::vector<std::string> warnings;
};

/*
 * All chi1 with w1 chi <= chi1 <= w1 chi + r whose partner
 * chi2 = chi + r - chi1 satisfies w2 chi <= chi2 <= w2 chi + r, ascending.
 */
ComponentEnumeration enumerate_components(const NodalCurve& c, std::int64_t r, std::int64_t chi, const Polarization& w);

// r^2 (g1 + g2 - 1) + 1
std::int64_t component_dimension(const NodalCurve& c, std::int64_t r);

// dim U_{C1}(r, d1) + dim U_{C2}(r, d2) + r^2 - 1 for degrees coprime to r.
std::int64_t projective_bundle_dimension(const NodalCurve& c, std::int64_t r);

// (r^2 - 1)(g1 + g2 - 1)
std::int64_t fixed_det_fiber_dimension(const NodalCurve& c, std::int64_t r);

} // namespace nodal
