#pragma once

#include <cstdint>
#include <random>

#include "nodal/gluing.hpp"
#include "oracles.hpp"

namespace gen {

inline nodal::Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return nodal::Rational(num(rng), den(rng));
}

// Product of an n x rank and a rank x n matrix with small rational entries;
// its rank is at most `rank` and usually equal.
inline nodal::RationalMatrix low_rank_matrix(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
    nodal::RationalMatrix left(n, rank), right(rank, n), out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j) left(i, j) = small_rational(rng);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < n; ++j) right(i, j) = small_rational(rng);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            nodal::Rational acc(0);
            for (std::size_t t = 0; t < rank; ++t) acc += left(i, t) * right(t, j);
            out(i, j) = acc;
        }
    return out;
}

inline oracle::QMatrix to_gmp(const nodal::RationalMatrix& m) {
    oracle::QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            q[i][j] = mpq_class(m(i, j).numerator(), m(i, j).denominator());
            q[i][j].canonicalize();
        }
    return q;
}

} // namespace gen
