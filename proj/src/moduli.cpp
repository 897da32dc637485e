#include "nodal/moduli.hpp"

#include <string>

#include "nodal/error.hpp"

namespace nodal {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_rank(std::int64_t r, std::int64_t min) {
    if (r < min) throw InvalidArgument("rank must be >= " + std::to_string(min) + ", got " + std::to_string(r));
}

} // namespace

ComponentEnumeration enumerate_components(const NodalCurve& c, std::int64_t r, std::int64_t chi, const Polarization& w) {
    require_rank(r, 2);
    const Rational chi_q(chi), r_q(r);
    const Rational lo1 = w.w1() * chi_q;
    const Rational lo2 = w.w2() * chi_q;

    ComponentEnumeration out;
    if (lo1.is_integer() || lo2.is_integer()) {
        out.non_generic = true;
        out.warnings.push_back("non-generic polarization: w_i*chi = " + lo1.str() + ", " + lo2.str() +
                               " is integral; boundary values included");
    }

    const std::int64_t dim = component_dimension(c, r);
    const std::int64_t first = to_int64(lo1.ceil());
    const std::int64_t last = to_int64((lo1 + r_q).floor());
    for (std::int64_t chi1 = first; chi1 <= last; ++chi1) {
        const std::int64_t chi2 = to_int64(big(chi) + big(r) - big(chi1));
        const Rational chi2_q(chi2);
        if (chi2_q < lo2 || chi2_q > lo2 + r_q) continue;
        out.records.push_back(ComponentRecord{
            chi1,
            chi2,
            chi_to_degree(chi1, r, c.g1()),
            chi_to_degree(chi2, r, c.g2()),
            dim,
        });
    }
    return out;
}

std::int64_t component_dimension(const NodalCurve& c, std::int64_t r) {
    require_rank(r, 1);
    return to_int64(big(r) * big(r) * (big(c.g1()) + big(c.g2()) - 1) + 1);
}

std::int64_t projective_bundle_dimension(const NodalCurve& c, std::int64_t r) {
    require_rank(r, 1);
    // Degree 1 is coprime to every r; the dimension does not depend on which
    // coprime degree is chosen.
    const Integer base = big(dim_moduli_smooth(r, 1, c.g1())) + big(dim_moduli_smooth(r, 1, c.g2()));
    return to_int64(base + big(r) * big(r) - 1);
}

std::int64_t fixed_det_fiber_dimension(const NodalCurve& c, std::int64_t r) {
    require_rank(r, 1);
    return to_int64((big(r) * big(r) - 1) * (big(c.g1()) + big(c.g2()) - 1));
}

} // namespace nodal
