#include "nodal/gluing.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "nodal/error.hpp"

namespace nodal {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows) : rows_(rows.size()) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& row : rows) {
        if (row.size() != cols_) throw InvalidArgument("ragged matrix: rows have different lengths");
        for (auto& x : row) data_.push_back(std::move(x));
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

std::vector<std::vector<Rational>> RationalMatrix::to_rows() const {
    std::vector<std::vector<Rational>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
}

std::int64_t matrix_rank(const RationalMatrix& m) {
    if (!m.is_square()) throw InvalidArgument("matrix_rank expects a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw InvalidArgument("matrix_rank expects a nonempty matrix");

    // Scaling a row by a nonzero integer does not change the rank.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[rank]);

        const Integer& p = a[rank][col];
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer t = a[i][j] * p - a[i][col] * a[rank][j];
                // Sylvester's identity makes this division exact.
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
                    throw std::logic_error("Bareiss step produced an inexact quotient");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

GluingDatum::GluingDatum(std::int64_t r, std::int64_t k, std::int64_t chi1, std::int64_t chi2)
    : r_(r), k_(k), chi1_(chi1), chi2_(chi2) {
    if (r < 2) throw InvalidArgument("gluing rank r must be >= 2, got " + std::to_string(r));
    if (k < 1 || k > r)
        throw InvalidArgument("rank of sigma k=" + std::to_string(k) + " out of range [1, " + std::to_string(r) + "]");
}

GluingDatum GluingDatum::from_matrix(RationalMatrix sigma, std::int64_t chi1, std::int64_t chi2) {
    if (!sigma.is_square()) throw InvalidArgument("sigma must be a square matrix");
    const auto r = static_cast<std::int64_t>(sigma.rows());
    const std::int64_t k = matrix_rank(sigma);
    if (k == 0) throw InvalidArgument("sigma must be a nonzero homomorphism");
    GluingDatum u(r, k, chi1, chi2);
    u.sigma_ = std::move(sigma);
    return u;
}

std::int64_t GluingDatum::total_chi() const {
    return to_int64(Integer(static_cast<long>(chi1_)) + Integer(static_cast<long>(chi2_)) -
                    Integer(static_cast<long>(r_)));
}

GluedClass glued_class(const GluingDatum& u) {
    const std::int64_t r = u.r();
    const std::int64_t k = u.k();
    return GluedClass{
        SheafClass(r, r, u.total_chi(), u.chi1(), u.chi2()),
        StalkType{k, r - k, r - k},
        k == r,
    };
}

CanonicalSubsheaves canonical_subsheaves(const GluingDatum& u) {
    return CanonicalSubsheaves{
        SheafClass(u.r(), 0, u.chi1() - u.k()),
        SheafClass(0, u.r(), u.chi2() - u.r()),
    };
}

} // namespace nodal
