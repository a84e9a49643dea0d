#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gl2f/errors.hpp"
#include "gl2f/op_parser.hpp"
#include "gl2f/theta.hpp"

using namespace gl2f;
using GO = GroupOperator;

TEST_CASE("basic symbols and composition") {
    CHECK(parse_operator("a") == GO::coordinate(var::A));
    CHECK(parse_operator("Dinv") == GO::det_inverse());
    CHECK(parse_operator("1") == GO::identity());
    CHECK(parse_operator("3/2") == GO::constant(rat(3, 2)));
    CHECK(parse_operator("a*da") == GO::coordinate(var::A) * GO::derivative(var::A));
}

TEST_CASE("the Euler operator") {
    GO expect = GO::coordinate(var::A) * GO::derivative(var::A) +
                GO::coordinate(var::B) * GO::derivative(var::B) +
                GO::coordinate(var::C) * GO::derivative(var::C) +
                GO::coordinate(var::D) * GO::derivative(var::D);
    CHECK(parse_operator("a*da + b*db + c*dc + d*dd") == expect);
}

TEST_CASE("composition is non-commutative and normalizes") {
    // da*a - a*da = 1
    CHECK(parse_operator("da*a - a*da") == GO::identity());
    CHECK_FALSE(parse_operator("da*a") == parse_operator("a*da"));
}

TEST_CASE("weighted symbols expand") {
    CHECK(parse_operator("wa") == weighted_derivation(var::A));
    CHECK(parse_operator("wb") == GO::derivative(var::B) +
                                      GO::coordinate(var::C) * GO::det_inverse());
    CHECK(parse_operator("wa*wd - wb*wc") ==
          weighted_derivation(var::A) * weighted_derivation(var::D) -
              weighted_derivation(var::B) * weighted_derivation(var::C));
}

TEST_CASE("powers, parentheses, unary minus") {
    CHECK(parse_operator("c^2") == GO::coordinate(var::C) * GO::coordinate(var::C));
    CHECK(parse_operator("(a + d)^2") ==
          (GO::coordinate(var::A) + GO::coordinate(var::D)).pow(2));
    CHECK(parse_operator("-a") == -GO::coordinate(var::A));
    CHECK(parse_operator("a - -b") == GO::coordinate(var::A) + GO::coordinate(var::B));
    CHECK(parse_operator("Dinv^3") == GO::det_inverse().pow(3));
    CHECK(parse_operator("2^3") == GO::constant(rat(8)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_operator("a +"), ParseError);
    CHECK_THROWS_AS(parse_operator("(a"), ParseError);
    CHECK_THROWS_AS(parse_operator("q"), ParseError);
    CHECK_THROWS_AS(parse_operator("a b"), ParseError);
    CHECK_THROWS_AS(parse_operator(""), ParseError);
    CHECK_THROWS_AS(parse_operator("a^-2"), ParseError);
    try {
        parse_operator("a * qq");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_operator("1/0"), ZeroDenominator);
}

TEST_CASE("print-parse round-trip on a corpus") {
    const char* corpus[] = {
        "a*da + b*db + c*dc + d*dd",
        "wa*wd - wb*wc",
        "c^2",
        "da*Dinv",
        "wb^2",
        "3/2*a^2*Dinv^2*db - c*dd^2",
        "Dinv",
        "1",
        "-a*b*c*d",
        "da*db*dc*dd",
    };
    for (const char* text : corpus) {
        const GO op = parse_operator(text);
        CAPTURE(text);
        CHECK(parse_operator(op.str()) == op);
    }
}

TEST_CASE("round-trip preserves theta images") {
    const GO op = parse_operator("wb^2 + 2*c*Dinv");
    const GO rt = parse_operator(op.str());
    CHECK(theta(op) == theta(rt));
}
