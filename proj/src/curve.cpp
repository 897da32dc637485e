#include "nodal/curve.hpp"

#include <string>

#include "nodal/error.hpp"

namespace nodal {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

} // namespace

NodalCurve::NodalCurve(std::int64_t g1, std::int64_t g2) : g1_(g1), g2_(g2) {
    if (g1 < 1 || g2 < 1)
        throw InvalidArgument("component genera must be >= 1, got (" + std::to_string(g1) + ", " +
                              std::to_string(g2) + ")");
}

std::int64_t arithmetic_genus(const NodalCurve& c) { return to_int64(big(c.g1()) + big(c.g2())); }

Polarization::Polarization(Rational w1, Rational w2) : w1_(std::move(w1)), w2_(std::move(w2)) {
    const Rational zero(0), one(1);
    if (!(zero < w1_ && w1_ < one) || !(zero < w2_ && w2_ < one) || w1_ + w2_ != one)
        throw InvalidArgument("invalid polarization (" + w1_.str() + ", " + w2_.str() +
                              "): need 0 < wi < 1 and w1 + w2 = 1");
}

SheafClass::SheafClass(std::int64_t r1, std::int64_t r2, std::int64_t chi, std::optional<std::int64_t> chi1,
                       std::optional<std::int64_t> chi2)
    : r1_(r1), r2_(r2), chi_(chi), chi1_(chi1), chi2_(chi2) {
    if (r1 < 0 || r2 < 0) throw InvalidArgument("ranks must be nonnegative");
    if (r1 == 0 && r2 == 0) throw InvalidArgument("the zero sheaf (multirank (0, 0)) is not supported");
}

std::int64_t SheafClass::degree(const NodalCurve& c, int component) const {
    const auto& part = component == 1 ? chi1_ : chi2_;
    if (!part) throw InvalidArgument("sheaf class carries no restriction Euler characteristics");
    return chi_to_degree(*part, component == 1 ? r1_ : r2_, c.genus(component));
}

Rational polarized_slope(const SheafClass& e, const Polarization& w) {
    const Rational weighted_rank = w.w1() * Rational(e.r1()) + w.w2() * Rational(e.r2());
    if (weighted_rank.sign() == 0) throw InvalidArgument("zero weighted rank");
    return Rational(e.chi()) / weighted_rank;
}

std::int64_t chi_to_degree(std::int64_t chi, std::int64_t rank, std::int64_t genus) {
    return to_int64(big(chi) - big(rank) * (1 - big(genus)));
}

std::int64_t degree_to_chi(std::int64_t degree, std::int64_t rank, std::int64_t genus) {
    return to_int64(big(degree) + big(rank) * (1 - big(genus)));
}

std::int64_t dim_moduli_smooth(std::int64_t r, std::int64_t d, std::int64_t g) {
    if (r < 1) throw InvalidArgument("rank must be >= 1");
    if (g < 1) throw InvalidArgument("genus must be >= 1");
    if (g == 1) {
        Integer out;
        const Integer dd = big(d);
        const Integer rr = big(r);
        mpz_gcd(out.get_mpz_t(), rr.get_mpz_t(), dd.get_mpz_t());
        return to_int64(out);
    }
    return to_int64(big(r) * big(r) * (big(g) - 1) + 1);
}

Rational mk_slope(std::int64_t degree, std::int64_t rank, std::int64_t m) {
    if (rank < 1) throw InvalidArgument("rank must be >= 1");
    return Rational(big(degree) + big(m), big(rank));
}

} // namespace nodal
