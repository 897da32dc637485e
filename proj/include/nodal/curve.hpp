#pragma once

#include <cstdint>
#include <optional>

#include "nodal/exact.hpp"

namespace nodal {

// Two smooth components of genera g1, g2 >= 1 meeting in a single node.
class NodalCurve {
public:
    NodalCurve(std::int64_t g1, std::int64_t g2);

    std::int64_t g1() const { return g1_; }
    std::int64_t g2() const { return g2_; }
    std::int64_t genus(int component) const { return component == 1 ? g1_ : g2_; }

    friend bool operator==(const NodalCurve&, const NodalCurve&) = default;

private:
    std::int64_t g1_;
    std::int64_t g2_;
};

std::int64_t arithmetic_genus(const NodalCurve& c);

/*
 * Rational weights (w1, w2) on the two components with 0 < wi < 1 and
 * w1 + w2 = 1. Invalid pairs are rejected, never normalised.
 */
class Polarization {
public:
    Polarization(Rational w1, Rational w2);
    static Polarization from_w1(const Rational& w1) { return {w1, Rational(1) - w1}; }

    const Rational& w1() const { return w1_; }
    const Rational& w2() const { return w2_; }
    const Rational& weight(int component) const { return component == 1 ? w1_ : w2_; }

    friend bool operator==(const Polarization&, const Polarization&) = default;

private:
    Rational w1_;
    Rational w2_;
};

/*
 * Discrete invariants of a depth-one sheaf: multirank (r1, r2), Euler
 * characteristic chi and, optionally, the Euler characteristics of the two
 * restrictions. The zero sheaf (r1 = r2 = 0) is not representable.
 */
class SheafClass {
public:
    SheafClass(std::int64_t r1, std::int64_t r2, std::int64_t chi,
               std::optional<std::int64_t> chi1 = std::nullopt,
               std::optional<std::int64_t> chi2 = std::nullopt);

    std::int64_t r1() const { return r1_; }
    std::int64_t r2() const { return r2_; }
    std::int64_t chi() const { return chi_; }
    const std::optional<std::int64_t>& chi1() const { return chi1_; }
    const std::optional<std::int64_t>& chi2() const { return chi2_; }

    // Multidegree (d1, d2) on the given curve; requires chi1 and chi2.
    std::int64_t degree(const NodalCurve& c, int component) const;

    friend bool operator==(const SheafClass&, const SheafClass&) = default;

private:
    std::int64_t r1_;
    std::int64_t r2_;
    std::int64_t chi_;
    std::optional<std::int64_t> chi1_;
    std::optional<std::int64_t> chi2_;
};

// chi / (w1 r1 + w2 r2)
Rational polarized_slope(const SheafClass& e, const Polarization& w);

// d = chi - r (1 - g) and its inverse.
std::int64_t chi_to_degree(std::int64_t chi, std::int64_t rank, std::int64_t genus);
std::int64_t degree_to_chi(std::int64_t degree, std::int64_t rank, std::int64_t genus);

// Dimension of the moduli space of semistable bundles of rank r and degree d
// on a smooth curve of genus g: r^2 (g - 1) + 1 for g >= 2, gcd(r, d) for g = 1.
std::int64_t dim_moduli_smooth(std::int64_t r, std::int64_t d, std::int64_t g);

// Shifted slope (d + m) / rk.
Rational mk_slope(std::int64_t degree, std::int64_t rank, std::int64_t m);

} // namespace nodal
