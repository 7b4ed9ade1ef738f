#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/binomials.hpp"
#include "polytrope/util.hpp"

using namespace polytrope;

TEST_CASE("monomial and binomial counts") {
    CHECK(enumerate_monomials(4, 2).size() == 12);
    CHECK(enumerate_binomials(4, 2).size() == 6);
    CHECK(enumerate_binomials(5, 2).size() == 30);
    CHECK(enumerate_monomials(6, 3).size() == 60);
    CHECK(enumerate_binomials(6, 3).size() == 60);
    for (int n = 4; n <= 8; ++n)
        for (int m = 2; m <= n / 2; ++m) {
            const long long pairs = binomial_coefficient(n, m) * binomial_coefficient(n - m, m);
            CHECK(enumerate_monomials(n, m).size() == static_cast<std::size_t>(pairs * m));
            CHECK(enumerate_binomials(n, m).size() ==
                  static_cast<std::size_t>(pairs * binomial_coefficient(m, 2)));
        }
}

TEST_CASE("bad block sizes are rejected") {
    CHECK_THROWS_AS(enumerate_monomials(4, 3), BadBlockSize);
    CHECK_THROWS_AS(enumerate_binomials(5, 1), BadBlockSize);
}

TEST_CASE("first monomial of n=4 m=2 is K={0,1}, L={2,3}, r=0") {
    const auto mono = enumerate_monomials(4, 2);
    CHECK(mono[0].sources == std::vector<int>{0, 1});
    CHECK(mono[0].sinks == std::vector<int>{2, 3});
    CHECK(mono[0].rotation == 0);
    CHECK(mono[0].edges() == std::vector<int>{0, 2, 1, 3}); // 0->2, 1->3
}

TEST_CASE("binomial normals: flow conservation, disjoint supports, orientation") {
    for (int n = 4; n <= 7; ++n)
        for (int m = 2; m <= n / 2; ++m)
            for (const auto& b : enumerate_binomials(n, m)) {
                // entries in {-1,0,1}, first nonzero is +1
                int first = 0;
                while (b.normal[first] == 0) ++first;
                CHECK(b.normal[first] == 1);
                for (int x : b.normal) CHECK((x >= -1 && x <= 1));
                // in the kernel of the flow operator
                for (int f : apply_flow(n, b.normal)) CHECK(f == 0);
                // plus and minus parts have m entries each
                int pos = 0, neg = 0;
                for (int x : b.normal) {
                    pos += x == 1;
                    neg += x == -1;
                }
                CHECK(pos == m);
                CHECK(neg == m);
                // the stored rotations reproduce the normal
                BipartiteMonomial p{b.m, b.sources, b.sinks, b.rot_plus};
                BipartiteMonomial q{b.m, b.sources, b.sinks, b.rot_minus};
                auto inc = p.incidence(n);
                const auto dec = q.incidence(n);
                for (int e = 0; e < edge_count(n); ++e) inc[e] -= dec[e];
                CHECK(inc == b.normal);
            }
}

TEST_CASE("catalog is the m-ascending concatenation") {
    const auto cat6 = binomial_catalog(6);
    CHECK(cat6.size() == 90 + 60);
    CHECK(cat6[0].m == 2);
    CHECK(cat6[90].m == 3);
    CHECK(binomial_catalog(4).size() == 6);
    CHECK(binomial_catalog(5).size() == 30);
}

TEST_CASE("matching blocks for n=6") {
    const auto blocks = matching_blocks(6, 3);
    CHECK(blocks.size() == 20);
    for (const auto& blk : blocks) {
        REQUIRE(blk.matchings[0].size() == 3);
        REQUIRE(blk.matchings[1].size() == 3);
        // even class is the rotation family in offset order
        for (int r = 0; r < 3; ++r)
            for (int t = 0; t < 3; ++t) CHECK(blk.matchings[0][r][t] == (t + r) % 3);
        // each parity class partitions the 9 block edges
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<int> sum(edge_count(6), 0);
            for (const auto& inc : blk.incidence[parity])
                for (int e = 0; e < edge_count(6); ++e) sum[e] += inc[e];
            int covered = 0;
            for (int s : sum) {
                CHECK(s <= 1);
                covered += s;
            }
            CHECK(covered == 9);
        }
        // hyperplanes are balanced and flow-conserving
        for (int parity = 0; parity < 2; ++parity)
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const auto h = blk.hyperplane(parity, a, b);
                    for (int f : apply_flow(6, h)) CHECK(f == 0);
                }
    }
}
