#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/kleene.hpp"
#include "polytrope/trees.hpp"
#include "polytrope/util.hpp"

#include "oracles.hpp"

using namespace polytrope;

namespace {

WeightMatrix from_rows(int n, const std::vector<std::vector<long>>& rows) {
    WeightMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, Rational(rows[i][j]));
    return m;
}

// The worked 3-node example used across the operation tests.
WeightMatrix example3() { return from_rows(3, {{0, 1, 5}, {1, 0, 1}, {2, 3, 0}}); }

WeightMatrix random_matrix(SplitMix64& rng, int n, long lo = -4, long hi = 8, long den_max = 4) {
    WeightMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, make_rational(rng.range(lo, hi), rng.range(1, den_max)));
    return m;
}

} // namespace

TEST_CASE("kleene star on the unit matrix is the identity map") {
    const WeightMatrix ones = all_ones_matrix(3);
    CHECK(kleene_star(ones) == ones);
}

TEST_CASE("kleene star of the worked example") {
    const WeightMatrix c = example3();
    const WeightMatrix star = kleene_star(c);
    CHECK(star == from_rows(3, {{0, 1, 2}, {1, 0, 1}, {2, 3, 0}}));
    // against exhaustive simple-path enumeration
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(star.at(i, j) == oracle::min_simple_path(c, i, j));
}

TEST_CASE("kleene star detects negative cycles") {
    WeightMatrix c(2);
    c.set(0, 1, Rational(1));
    c.set(1, 0, Rational(-2));
    CHECK_THROWS_AS(kleene_star(c), NegativeCycleError);
}

TEST_CASE("kleene star agrees with the path oracle and is idempotent") {
    SplitMix64 rng(42);
    int done = 0;
    while (done < 60) {
        const int n = 2 + static_cast<int>(rng.below(4)); // up to 5 nodes
        WeightMatrix c = random_matrix(rng, n);
        if (min_mean_cycle(c) < 0) continue;
        ++done;
        const WeightMatrix star = kleene_star(c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(star.at(i, j) == oracle::min_simple_path(c, i, j));
        CHECK(kleene_star(star) == star);
        // monotone: star <= c entrywise
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(star.at(i, j) <= c.at(i, j));
    }
}

TEST_CASE("min mean cycle basics") {
    WeightMatrix two(2);
    two.set(0, 1, Rational(3));
    two.set(1, 0, Rational(5));
    CHECK(min_mean_cycle(two) == 4);

    CHECK(min_mean_cycle(WeightMatrix(4)) == 0); // all-zero matrix
    CHECK(min_mean_cycle(example3()) == 1);
}

TEST_CASE("min mean cycle agrees with the cycle oracle, any sign") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5)); // up to 6 nodes
        WeightMatrix c = random_matrix(rng, n);
        CHECK(min_mean_cycle(c) == oracle::min_cycle_mean(c));
    }
}

TEST_CASE("min mean cycle shift law") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(3));
        WeightMatrix c = random_matrix(rng, n);
        const Rational t = make_rational(rng.range(-5, 5), rng.range(1, 3));
        CHECK(min_mean_cycle(c.shifted(t)) == min_mean_cycle(c) - t);
        const Rational lambda = min_mean_cycle(c);
        CHECK(min_mean_cycle(c.shifted(lambda)) == 0);
    }
}

TEST_CASE("membership flags") {
    const RegionReport ones = membership(all_ones_matrix(3));
    CHECK(ones.in_Rn);
    CHECK(ones.in_Rn_interior);
    CHECK(ones.in_Pn);
    CHECK(ones.in_Pn_interior);

    WeightMatrix zero2(3);
    zero2.set(0, 1, Rational(1));
    zero2.set(1, 0, Rational(-1));
    zero2.set(0, 2, Rational(1));
    zero2.set(2, 0, Rational(1));
    zero2.set(1, 2, Rational(1));
    zero2.set(2, 1, Rational(1));
    const RegionReport r = membership(zero2);
    CHECK(r.in_Rn);
    CHECK_FALSE(r.in_Rn_interior);

    CHECK_FALSE(membership(example3()).in_Pn); // c != c*
    CHECK(membership(kleene_star(example3())).in_Pn);
}

TEST_CASE("triangle functionals: count, order, signs") {
    for (int n = 3; n <= 6; ++n)
        CHECK(triangle_functionals(n).size() == static_cast<std::size_t>(n * (n - 1) * (n - 2)));

    // interior point: all plus
    for (int s : triangle_sign_vector(all_ones_matrix(4))) CHECK(s == 1);

    // one tight triangle: c_{02} = c_{01} + c_{12}, everything else slack
    WeightMatrix t(3);
    t.set(0, 1, Rational(1));
    t.set(1, 2, Rational(1));
    t.set(0, 2, Rational(2));
    t.set(1, 0, Rational(1));
    t.set(2, 1, Rational(1));
    t.set(2, 0, make_rational(3, 2));
    const auto tris = triangle_functionals(3);
    const auto signs = triangle_sign_vector(t);
    int zeros = 0;
    for (std::size_t k = 0; k < tris.size(); ++k) {
        if (signs[k] == 0) {
            ++zeros;
            CHECK(tris[k].i == 0);
            CHECK(tris[k].j == 2);
            CHECK(tris[k].k == 1);
        }
    }
    CHECK(zeros == 1);

    // worked example: functional (i=0, j=2, k=1) evaluates 1 + 1 - 5 = -3
    const auto ex_signs = triangle_sign_vector(example3());
    for (std::size_t k = 0; k < tris.size(); ++k)
        if (tris[k].i == 0 && tris[k].j == 2 && tris[k].k == 1) CHECK(ex_signs[k] == -1);
}

TEST_CASE("shortest path trees on the interior are stars") {
    const auto result = shortest_path_trees(all_ones_matrix(4));
    REQUIRE(std::holds_alternative<TreeTuple>(result));
    const auto& t = std::get<TreeTuple>(result);
    for (int r = 0; r < 4; ++r)
        for (int v = 0; v < 4; ++v)
            if (v != r) CHECK(t.next_hop[r][v] == r);
    CHECK(trees_compatible(t));
}

TEST_CASE("worked example has a tied pair; breaking it routes 0->1->2") {
    // In the worked matrix the pair (2,1) ties: direct weight 3 equals the
    // two-step route 2 -> 0 -> 1.
    const auto tied = shortest_path_trees(example3());
    REQUIRE(std::holds_alternative<AmbiguityReport>(tied));
    bool found = false;
    for (auto [i, j] : std::get<AmbiguityReport>(tied).tied_pairs)
        if (i == 2 && j == 1) found = true;
    CHECK(found);

    // Nudging c_{21} off the tie leaves all shortest paths unique.
    WeightMatrix c = example3();
    c.set(2, 1, make_rational(7, 2));
    const auto result = shortest_path_trees(c);
    REQUIRE(std::holds_alternative<TreeTuple>(result));
    const auto& t = std::get<TreeTuple>(result);
    CHECK(t.next_hop[2][0] == 1); // tree rooted at node 2 sends 0 via 1
    CHECK(t.path_to_root(2, 0) == std::vector<int>{0, 1, 2});
    CHECK(trees_compatible(t));
}

TEST_CASE("ties produce an ambiguity report") {
    WeightMatrix c(3);
    c.set(0, 1, Rational(1));
    c.set(1, 2, Rational(1));
    c.set(0, 2, Rational(2)); // tie: direct 0->2 equals 0->1->2
    c.set(1, 0, Rational(1));
    c.set(2, 1, Rational(1));
    c.set(2, 0, Rational(2));
    const auto result = shortest_path_trees(c);
    REQUIRE(std::holds_alternative<AmbiguityReport>(result));
    const auto& amb = std::get<AmbiguityReport>(result);
    bool found = false;
    for (auto [i, j] : amb.tied_pairs)
        if (i == 0 && j == 2) found = true;
    CHECK(found);
}

TEST_CASE("unique trees are always compatible") {
    SplitMix64 rng(101);
    int done = 0;
    while (done < 40) {
        const int n = 3 + static_cast<int>(rng.below(3));
        WeightMatrix c = random_matrix(rng, n, 1, 9, 3); // positive weights
        const auto result = shortest_path_trees(c);
        if (!std::holds_alternative<TreeTuple>(result)) continue;
        ++done;
        CHECK(trees_compatible(std::get<TreeTuple>(result)));
    }
}
