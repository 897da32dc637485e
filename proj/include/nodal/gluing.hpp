#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nodal/curve.hpp"
#include "nodal/exact.hpp"

namespace nodal {

// Dense row-major matrix of rationals. Rows must all have the same length.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(std::vector<std::vector<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::vector<std::vector<Rational>> to_rows() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/*
 * Rank over Q of a square matrix. Each row is cleared of denominators and the
 * resulting integer matrix is reduced by fraction-free (Bareiss) elimination.
 * Throws InvalidArgument for a non-square or empty matrix.
 */
std::int64_t matrix_rank(const RationalMatrix& m);

/*
 * Data of a glued sheaf: rank r on both components, rank k of the fiber map
 * sigma, and the Euler characteristics of the two bundles. When sigma is
 * given explicitly, k is its rank.
 */
class GluingDatum {
public:
    GluingDatum(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2);
    // k is read off the matrix. Throws when sigma is zero or not square of size >= 2.
    static GluingDatum from_matrix(RationalMatrix sigma, std::int64_t chi1, std::int64_t chi2);

    std::int64_t r() const { return r_; }
    std::int64_t k() const { return k_; }
    std::int64_t chi1() const { return chi1_; }
    std::int64_t chi2() const { return chi2_; }
    std::int64_t chi(int component) const { return component == 1 ? chi1_ : chi2_; }
    const std::optional<RationalMatrix>& sigma() const { return sigma_; }

    // chi of the glued sheaf: chi1 + chi2 - r.
    std::int64_t total_chi() const;

private:
    std::int64_t r_;
    std::int64_t k_;
    std::int64_t chi1_;
    std::int64_t chi2_;
    std::optional<RationalMatrix> sigma_;
};

// Stalk at the node: O_p^a + O_{q1}^b + O_{q2}^c.
struct StalkType {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const StalkType&, const StalkType&) = default;
};

struct GluedClass {
    SheafClass sheaf;
    StalkType stalk;
    bool is_vector_bundle;
};

GluedClass glued_class(const GluingDatum& u);

// The kernels K1 (multirank (r, 0)) and K2 (multirank (0, r)) sitting inside
// the glued sheaf.
struct CanonicalSubsheaves {
    SheafClass k1;
    SheafClass k2;
};

CanonicalSubsheaves canonical_subsheaves(const GluingDatum& u);

} // namespace nodal
