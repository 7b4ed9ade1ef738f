#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/rational.hpp"
#include "polytrope/weight_matrix.hpp"

using namespace polytrope;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("0/7") == 0);
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(make_rational(-7, 3)) == "-7/3");
    CHECK(parse_rational(format_rational(make_rational(22, 8))) == make_rational(11, 4));

    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("weight matrix json round trip") {
    WeightMatrix m(3);
    m.set(0, 1, make_rational(1, 2));
    m.set(0, 2, Rational(-3));
    m.set(1, 0, make_rational(7, 5));
    m.set(1, 2, Rational(0));
    m.set(2, 0, Rational(2));
    m.set(2, 1, make_rational(9, 4));
    const WeightMatrix back = WeightMatrix::from_json_text(m.to_json_text());
    CHECK(back == m);
}

TEST_CASE("weight matrix json rejects bad input") {
    CHECK_THROWS_AS(WeightMatrix::from_json_text("{"), ParseError);
    CHECK_THROWS_AS(WeightMatrix::from_json_text(R"({"n":3})"), ParseError);
    // nonzero diagonal
    CHECK_THROWS_AS(WeightMatrix::from_json_text(
                        R"({"n":2,"entries":[["1","2"],["3","0"]]})"),
                    ParseError);
    // ragged rows
    CHECK_THROWS_AS(WeightMatrix::from_json_text(
                        R"({"n":2,"entries":[["0","2"],["3"]]})"),
                    ParseError);
    // n out of range
    CHECK_THROWS_AS(WeightMatrix::from_json_text(R"({"n":1,"entries":[["0"]]})"), ParseError);
    // zero-valued diagonal strings other than "0" are still zero, hence fine
    CHECK_NOTHROW(WeightMatrix::from_json_text(R"({"n":2,"entries":[["0/3","2"],["3","0"]]})"));
}

TEST_CASE("edge indexing is lexicographic and invertible") {
    for (int n = 2; n <= 8; ++n) {
        int expected = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(edge_index(n, i, j) == expected);
                auto [a, b] = edge_at(n, expected);
                CHECK(a == i);
                CHECK(b == j);
                ++expected;
            }
        CHECK(expected == edge_count(n));
    }
}
