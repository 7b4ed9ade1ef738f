#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/fans.hpp"
#include "polytrope/lp.hpp"
#include "polytrope/util.hpp"

#include "oracles.hpp"

using namespace polytrope;

namespace {

std::vector<Rational> rvec(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("one-dimensional strict systems") {
    ConeSystem contradictory{1, {}};
    contradictory.add(rvec({1}), Relation::Gt);
    contradictory.add(rvec({-1}), Relation::Gt);
    CHECK_FALSE(feasible(contradictory).has_value());

    ConeSystem open_ray{1, {}};
    open_ray.add(rvec({1}), Relation::Gt);
    const auto w = feasible(open_ray);
    REQUIRE(w.has_value());
    CHECK(w->point[0] >= 1);
    CHECK(witness_satisfies(open_ray, w->point));
}

TEST_CASE("witnesses satisfy their systems with margin") {
    ConeSystem sys{3, {}};
    sys.add(rvec({1, -1, 0}), Relation::Gt);
    sys.add(rvec({0, 1, -1}), Relation::Gt);
    sys.add(rvec({0, -1, 0}), Relation::Ge);
    sys.add(rvec({1, 1, 1}), Relation::Lt);
    const auto w = feasible(sys);
    REQUIRE(w.has_value());
    CHECK(witness_satisfies(sys, w->point));
    // strict rows get slack at least 1 under the homogeneous reduction
    CHECK(w->slacks[0] >= 1);
    CHECK(w->slacks[1] >= 1);
    CHECK(w->slacks[3] <= -1);
}

TEST_CASE("interior witness and dimensions") {
    ConeSystem free3{3, {}};
    CHECK(cone_dimension(free3) == 3);

    ConeSystem one_eq{3, {}};
    one_eq.add(rvec({1, 2, 3}), Relation::Eq);
    CHECK(cone_dimension(one_eq) == 2);

    ConeSystem half{1, {}};
    half.add(rvec({1}), Relation::Ge);
    const Witness w = interior_witness(half);
    CHECK(w.point[0] >= 1);

    // x >= 0 and -x >= 0 force the line to a point
    ConeSystem pinched{2, {}};
    pinched.add(rvec({1, 0}), Relation::Ge);
    pinched.add(rvec({-1, 0}), Relation::Ge);
    const RelativeInterior ri = relative_interior(pinched);
    CHECK(ri.dimension == 1);
    CHECK(ri.forced_zero == std::vector<char>{1, 1});
    CHECK(ri.witness.point[0] == 0);

    // opposite weak halves of a 2-plane in R^3, forced as a pair
    ConeSystem plane{3, {}};
    plane.add(rvec({1, 1, -2}), Relation::Ge);
    plane.add(rvec({-1, -1, 2}), Relation::Ge);
    plane.add(rvec({1, 0, 0}), Relation::Ge);
    const RelativeInterior ri2 = relative_interior(plane);
    CHECK(ri2.dimension == 2);
    CHECK(ri2.forced_zero == std::vector<char>{1, 1, 0});
    CHECK(ri2.witness.slacks[2] >= 1);
}

TEST_CASE("infeasible strict systems throw on witness requests") {
    ConeSystem sys{2, {}};
    sys.add(rvec({1, 0}), Relation::Gt);
    sys.add(rvec({-1, 0}), Relation::Ge);
    CHECK_THROWS_AS(interior_witness(sys), InfeasibleSystem);
}

TEST_CASE("feasible agrees with Fourier-Motzkin on random strict systems") {
    SplitMix64 rng(2024);
    int agreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 2 + static_cast<int>(rng.below(3));
        const int rows = 1 + static_cast<int>(rng.below(6));
        ConeSystem sys{dim, {}};
        std::vector<std::pair<std::vector<Rational>, bool>> fm_rows;
        for (int r = 0; r < rows; ++r) {
            std::vector<Rational> normal(dim);
            for (auto& x : normal) x = Rational(rng.range(-3, 3));
            const bool strict = rng.below(2) == 0;
            fm_rows.push_back({normal, strict});
            sys.add(std::move(normal), strict ? Relation::Gt : Relation::Ge);
        }
        const bool lp_verdict = feasible(sys).has_value();
        const bool fm_verdict = oracle::fm_feasible(fm_rows, dim);
        CHECK(lp_verdict == fm_verdict);
        agreements += lp_verdict == fm_verdict;
    }
    CHECK(agreements == 200);
}

TEST_CASE("feasible agrees with Fourier-Motzkin on the 64 chamber systems") {
    // all sign assignments of the six n=4 binomials, with strict triangles
    FanContext ctx(4);
    for (int mask = 0; mask < 64; ++mask) {
        ConeSystem sys{12, {}};
        std::vector<std::pair<std::vector<Rational>, bool>> fm_rows;
        for (const auto& normal : ctx.triangle_normals()) {
            std::vector<Rational> r(normal.begin(), normal.end());
            fm_rows.push_back({r, true});
            sys.add(std::move(r), Relation::Gt);
        }
        for (int b = 0; b < 6; ++b) {
            const int sign = (mask >> b) & 1 ? 1 : -1;
            std::vector<Rational> r(12);
            for (int e = 0; e < 12; ++e) r[e] = sign * ctx.m2()[b].normal[e];
            fm_rows.push_back({r, true});
            sys.add(std::move(r), Relation::Gt);
        }
        CHECK(feasible(sys).has_value() == oracle::fm_feasible(fm_rows, 12));
    }
}

TEST_CASE("determinism: identical systems give identical witnesses") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 3 + static_cast<int>(rng.below(3));
        ConeSystem sys{dim, {}};
        for (int r = 0; r < 6; ++r) {
            std::vector<Rational> normal(dim);
            for (auto& x : normal) x = Rational(rng.range(-3, 3));
            sys.add(std::move(normal), rng.below(2) ? Relation::Ge : Relation::Gt);
        }
        const auto a = feasible(sys);
        const auto b = feasible(sys);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->point == b->point);
    }
}
