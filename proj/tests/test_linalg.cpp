#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/linalg.hpp"
#include "polytrope/util.hpp"

using namespace polytrope;

namespace {

RationalMatrix rand_matrix(SplitMix64& rng, int rows, int cols) {
    RationalMatrix m(rows, std::vector<Rational>(cols));
    for (auto& r : m)
        for (auto& x : r) x = make_rational(rng.range(-5, 5), rng.range(1, 3));
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank_of({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
    CHECK(rank_of({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(rank_of({}) == 0);
    CHECK(rank_of({{Rational(0), Rational(0)}}) == 0);
}

TEST_CASE("kernel vectors annihilate the rows") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + static_cast<int>(rng.below(5));
        const int cols = 2 + static_cast<int>(rng.below(6));
        RationalMatrix m = rand_matrix(rng, rows, cols);
        const auto basis = kernel_basis(m, cols);
        CHECK(static_cast<int>(basis.size()) == cols - rank_of(m));
        for (const auto& v : basis)
            for (const auto& row : m) CHECK(dot(row, v) == 0);
        // basis vectors are independent
        CHECK(rank_of(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("solve_square solves and rejects singular") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        RationalMatrix a = rand_matrix(rng, n, n);
        std::vector<Rational> x_true(n);
        for (auto& v : x_true) v = make_rational(rng.range(-4, 4), rng.range(1, 3));
        std::vector<Rational> b(n, Rational(0));
        for (int i = 0; i < n; ++i) b[i] = dot(a[i], x_true);
        auto x = solve_square(a, b);
        if (rank_of(a) < n) {
            // singular draws are possible; solve may fail even though b is consistent
            continue;
        }
        REQUIRE(x.has_value());
        CHECK(*x == x_true);
    }
    CHECK_FALSE(solve_square({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                             {Rational(1), Rational(1)})
                    .has_value());
}

TEST_CASE("primitive integer vector") {
    const auto v = primitive_integer_vector({make_rational(-2, 3), make_rational(4, 9), Rational(0)});
    // scaled by 9: (-6, 4, 0), content 2, leading sign flip
    CHECK(v == std::vector<Integer>{Integer(3), Integer(-2), Integer(0)});
    CHECK(primitive_integer_vector({Rational(0), Rational(0)}).empty());
}

TEST_CASE("incremental rank mirrors batch rank and rolls back") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int cols = 3 + static_cast<int>(rng.below(5));
        IncrementalRank inc(cols);
        RationalMatrix accepted;
        for (int step = 0; step < 10; ++step) {
            std::vector<Rational> row(cols);
            for (auto& x : row) x = make_rational(rng.range(-3, 3));
            RationalMatrix probe = accepted;
            probe.push_back(row);
            const bool independent = rank_of(probe) > rank_of(accepted);
            CHECK(inc.add_row(row) == independent);
            if (independent) accepted.push_back(row);
            CHECK(inc.rank() == rank_of(accepted));
        }
        // rollback restores the previous basis
        if (inc.rank() > 0) {
            const int before = inc.rank();
            inc.pop_row();
            CHECK(inc.rank() == before - 1);
            CHECK(inc.add_row(accepted.back()));
        }
    }
}
