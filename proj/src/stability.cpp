#include "nodal/stability.hpp"

#include <string>

namespace nodal {

namespace {

Rational q(std::int64_t v) { return Rational(v); }

std::int64_t max_below(const Rational& bound, BundleHypothesis hyp) {
    if (hyp == BundleHypothesis::semistable) return to_int64(bound.floor());
    return to_int64(bound.ceil() - 1);
}

bool violates(const Rational& mu_f, const Rational& mu_e, bool strict) {
    return strict ? !(mu_f < mu_e) : !(mu_f <= mu_e);
}

SufficiencyResult run_check(const StabilityHypotheses& h, const Polarization& w, bool strict, std::int64_t window) {
    if (auto bad = violated_condition(h.datum(), w)) throw PreconditionFailed(*bad);

    const std::int64_t r = h.r();
    const std::int64_t k = h.k();
    const Rational mu_e = polarized_slope(glued_class(h.datum()).sheaf, w);
    const auto hyp = strict ? BundleHypothesis::stable : BundleHypothesis::semistable;

    SufficiencyResult out;
    for (std::int64_t s = 0; s <= k; ++s) {
        for (std::int64_t s1 = s; s1 <= r; ++s1) {
            for (std::int64_t s2 = s; s2 <= r; ++s2) {
                if (s1 == 0 && s2 == 0) continue;
                if (strict && s1 == r && s2 == r) continue;
                ++out.shapes_checked;

                const DegreeBounds b = max_degree_bounds({s, s1, s2}, h, hyp);
                const std::int64_t span1 = b.max_deg_g1 ? window : 0;
                const std::int64_t span2 = b.max_deg_g2 ? window : 0;
                for (std::int64_t i = 0; i <= span1; ++i) {
                    for (std::int64_t j = 0; j <= span2; ++j) {
                        SubsheafInvariant f{s, s1, s2, b.max_deg_g1.value_or(0) - i, b.max_deg_g2.value_or(0) - j};
                        if (violates(subsheaf_slope(f, h, w), mu_e, strict)) {
                            out.holds = false;
                            out.witness = f;
                            return out;
                        }
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

StabilityHypotheses::StabilityHypotheses(const NodalCurve& curve, std::int64_t r, std::int64_t k, std::int64_t chi1,
                                         std::int64_t chi2)
    : curve_(curve), datum_(r, k, chi1, chi2), d1_(chi_to_degree(chi1, r, curve.g1())),
      d2_(chi_to_degree(chi2, r, curve.g2())) {}

Rational subsheaf_slope(const SubsheafInvariant& f, const StabilityHypotheses& h, const Polarization& w) {
    if (f.s1 == 0 && f.s2 == 0) throw InvalidArgument("subsheaf has multirank (0, 0)");
    if (f.s1 < 0 || f.s2 < 0 || f.s < 0) throw InvalidArgument("subsheaf ranks must be nonnegative");
    const Rational chi_g1 = q(f.deg_g1) + q(f.s1) * (q(1) - q(h.g1()));
    const Rational chi_g2 = q(f.deg_g2) + q(f.s2) * (q(1) - q(h.g2()));
    const Rational chi_f = chi_g1 + chi_g2 + q(f.s);
    return chi_f / (w.w1() * q(f.s1) + w.w2() * q(f.s2));
}

DegreeBounds max_degree_bounds(const SubsheafShape& shape, const StabilityHypotheses& h, BundleHypothesis hyp) {
    if (shape.s1 < 0 || shape.s2 < 0) throw InvalidArgument("subsheaf ranks must be nonnegative");
    DegreeBounds out;
    const Rational r = q(h.r());
    if (shape.s1 > 0) out.max_deg_g1 = max_below(q(shape.s1) * (q(h.d1()) - q(h.k())) / r, hyp);
    if (shape.s2 > 0) out.max_deg_g2 = max_below(q(shape.s2) * (q(h.d2()) - q(2) * r) / r, hyp);
    return out;
}

PreconditionFailed::PreconditionFailed(NecessaryCondition c)
    : InvalidArgument(std::string("polarization violates necessary condition ") + describe(c)), condition_(c) {}

SufficiencyResult check_sufficiency(const StabilityHypotheses& h, const Polarization& w, bool strict) {
    return run_check(h, w, strict, 0);
}

SufficiencyResult check_sufficiency_window(const StabilityHypotheses& h, const Polarization& w, bool strict,
                                           std::int64_t window) {
    if (window < 0) throw InvalidArgument("degree window must be nonnegative");
    return run_check(h, w, strict, window);
}

bool mk_semistable_test(DegreeRank sub, DegreeRank amb, std::int64_t m, std::int64_t k, bool strict) {
    const Rational lhs = mk_slope(sub.degree, sub.rank, m);
    const Rational rhs = mk_slope(amb.degree, amb.rank, to_int64(Integer(static_cast<long>(m)) - Integer(static_cast<long>(k))));
    return strict ? lhs < rhs : lhs <= rhs;
}

std::int64_t nonstable_locus_codim_bound(std::int64_t r, std::int64_t g, std::int64_t s) {
    if (g < 1) throw InvalidArgument("genus must be >= 1");
    if (s < 1 || s > r - 1)
        throw InvalidArgument("subbundle rank s=" + std::to_string(s) + " out of range [1, " + std::to_string(r - 1) + "]");
    const Rational bound = q(s) * ((q(g) - q(1)) * (q(r) - q(s)) - q(r));
    return to_int64(bound.numerator());
}

} // namespace nodal
