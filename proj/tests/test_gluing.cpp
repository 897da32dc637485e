#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "nodal/error.hpp"
#include "nodal/gluing.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Rational>> out;
    for (auto row : rows) {
        auto& r = out.emplace_back();
        for (const char* x : row) r.push_back(Rational::parse(x));
    }
    return RationalMatrix(std::move(out));
}

} // namespace

TEST_CASE("matrix rank examples") {
    CHECK(matrix_rank(RationalMatrix::identity(2)) == 2);
    CHECK(matrix_rank(M({{"1", "0"}, {"0", "0"}})) == 1);

    // Third row is the sum of the first two.
    const auto dependent = M({{"1", "2", "3"}, {"0", "1/2", "-1"}, {"1", "5/2", "2"}});
    CHECK(oracle::minors_rank(gen::to_gmp(dependent)) == 2);
    CHECK(matrix_rank(dependent) == 2);

    CHECK(matrix_rank(M({{"0", "0"}, {"0", "0"}})) == 0);
    CHECK(matrix_rank(M({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}})) == 2);
}

TEST_CASE("matrix rank rejects bad shapes") {
    CHECK_THROWS_AS(matrix_rank(RationalMatrix(2, 3)), InvalidArgument);
    CHECK_THROWS_AS(matrix_rank(RationalMatrix()), InvalidArgument);
    CHECK_THROWS_AS(M({{"1", "2"}, {"3"}}), InvalidArgument);
}

TEST_CASE("matrix rank agrees with the minors oracle") {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t target = std::uniform_int_distribution<std::size_t>(0, n)(rng);
            const auto m = gen::low_rank_matrix(rng, n, target);
            REQUIRE(matrix_rank(m) == oracle::minors_rank(gen::to_gmp(m)));
        }
    }
}

TEST_CASE("gluing datum validation") {
    CHECK_THROWS_AS(GluingDatum(1, 1, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(GluingDatum(2, 0, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(GluingDatum(2, 3, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(GluingDatum::from_matrix(RationalMatrix(2, 2), 0, 0), InvalidArgument);
    CHECK_THROWS_AS(GluingDatum::from_matrix(RationalMatrix::identity(1), 0, 0), InvalidArgument);
    CHECK_THROWS_AS(GluingDatum::from_matrix(RationalMatrix(2, 3), 0, 0), InvalidArgument);
    CHECK(GluingDatum::from_matrix(M({{"0", "3"}, {"0", "0"}}), 1, 1).k() == 1);
}

TEST_CASE("glued class examples") {
    {
        const auto g = glued_class(GluingDatum(2, 2, 1, 1));
        CHECK(g.sheaf == SheafClass(2, 2, 0, 1, 1));
        CHECK(g.stalk == StalkType{2, 0, 0});
        CHECK(g.is_vector_bundle);
    }
    {
        const auto g = glued_class(GluingDatum(2, 1, 1, 1));
        CHECK(g.sheaf.chi() == 0);
        CHECK(g.stalk == StalkType{1, 1, 1});
        CHECK_FALSE(g.is_vector_bundle);
    }
    {
        const auto g = glued_class(GluingDatum(3, 2, 4, -1));
        CHECK(g.sheaf.chi() == 0);
        CHECK(g.stalk == StalkType{2, 1, 1});
    }
}

TEST_CASE("canonical subsheaves examples") {
    auto ks = canonical_subsheaves(GluingDatum(2, 2, 3, 1));
    CHECK(ks.k1 == SheafClass(2, 0, 1));
    CHECK(ks.k2 == SheafClass(0, 2, -1));

    ks = canonical_subsheaves(GluingDatum(2, 1, 0, 2));
    CHECK(ks.k1 == SheafClass(2, 0, -1));
    CHECK(ks.k2 == SheafClass(0, 2, 0));

    ks = canonical_subsheaves(GluingDatum(3, 3, 3, 3));
    CHECK(ks.k1.chi() == 0);
    CHECK(ks.k2.chi() == 0);
}

TEST_CASE("glued class invariants on a box") {
    for (std::int64_t r = 2; r <= 6; ++r)
        for (std::int64_t k = 1; k <= r; ++k)
            for (std::int64_t c1 = -12; c1 <= 12; ++c1)
                for (std::int64_t c2 = -12; c2 <= 12; ++c2) {
                    const auto g = glued_class(GluingDatum(r, k, c1, c2));
                    REQUIRE(g.sheaf.chi() + r == c1 + c2);
                    REQUIRE(g.stalk.a + g.stalk.b == r);
                    REQUIRE(g.stalk.a + g.stalk.c == r);
                    REQUIRE(g.stalk.a == k);
                    REQUIRE(g.sheaf.r1() == r);
                    REQUIRE(g.sheaf.r2() == r);
                }
}

TEST_CASE("explicit sigma agrees with the declared rank") {
    std::mt19937_64 rng(3);
    for (std::size_t r = 2; r <= 4; ++r)
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t target = std::uniform_int_distribution<std::size_t>(1, r)(rng);
            auto m = gen::low_rank_matrix(rng, r, target);
            if (matrix_rank(m) == 0) continue;
            const auto from_matrix = GluingDatum::from_matrix(m, 2, -1);
            const auto declared = GluingDatum(static_cast<std::int64_t>(r), from_matrix.k(), 2, -1);
            const auto a = glued_class(from_matrix);
            const auto b = glued_class(declared);
            REQUIRE(a.sheaf == b.sheaf);
            REQUIRE(a.stalk == b.stalk);
            REQUIRE(a.is_vector_bundle == b.is_vector_bundle);
            REQUIRE(from_matrix.sigma().has_value());
        }
}
