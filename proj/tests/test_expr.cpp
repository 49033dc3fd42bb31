#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympspec/errors.hpp"
#include "sympspec/expr.hpp"

using namespace sympspec;
using expr::parse;

static double ev(const char* src, long n) { return expr::eval(parse(src), n); }

TEST_CASE("numbers and the variable") {
    CHECK(ev("42", 1) == 42.0);
    CHECK(ev("3.25", 9) == 3.25);
    CHECK(ev("n", 7) == 7.0);
}

TEST_CASE("arithmetic and precedence") {
    CHECK(ev("2+2/n^2", 2) == doctest::Approx(2.5));
    CHECK(ev("1+2*3", 1) == 7.0);
    CHECK(ev("(1+2)*3", 1) == 9.0);
    CHECK(ev("2^3*2", 1) == 16.0);
    CHECK(ev("10-4-3", 1) == 3.0); // left associative
    CHECK(ev("24/4/2", 1) == 3.0);
}

TEST_CASE("unary minus binds looser than the power") {
    CHECK(ev("-2^2", 1) == -4.0);
    CHECK(ev("(-2)^2", 1) == 4.0);
    CHECK(ev("--3", 1) == 3.0);
    CHECK(ev("2--3", 1) == 5.0);
}

TEST_CASE("negative and zero exponents") {
    CHECK(ev("2^-2", 1) == 0.25);
    CHECK(ev("n^0", 5) == 1.0);
    CHECK(ev("n^-1", 4) == 0.25);
}

TEST_CASE("sequence formulas used by the operator specs") {
    CHECK(ev("1 + 1/(2*(n+1)^2) + 1/(2*(n+1)^3)", 1) == doctest::Approx(1.1875));
    CHECK(ev("1/(2*(n+1)^2) - 1/(2*(n+1)^3)", 1) == doctest::Approx(0.0625));
}

TEST_CASE("whitespace insensitivity") {
    CHECK(ev("  1 +\t2 * n ", 3) == 7.0);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("1+"), ParseError);
    CHECK_THROWS_AS(parse("(1+2"), ParseError);
    CHECK_THROWS_AS(parse("1 2"), ParseError);
    CHECK_THROWS_AS(parse("x+1"), ParseError);
    CHECK_THROWS_AS(parse("n^n"), ParseError);   // exponent must be a literal integer
    CHECK_THROWS_AS(parse("n^1.5"), ParseError);
    try {
        parse("1+*2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("exponent range is [-12, 12]") {
    CHECK(ev("2^12", 1) == 4096.0);
    CHECK(ev("2^-12", 1) == doctest::Approx(1.0 / 4096.0));
    CHECK_THROWS_AS(parse("2^13"), ParseError);
    CHECK_THROWS_AS(parse("2^-13"), ParseError);
}

TEST_CASE("nesting depth is capped") {
    std::string deep;
    for (int i = 0; i < 100; ++i) deep += "(";
    deep += "1";
    for (int i = 0; i < 100; ++i) deep += ")";
    CHECK_THROWS_AS(parse(deep), ParseError);
    std::string ok = "((((((1))))))";
    CHECK(ev(ok.c_str(), 1) == 1.0);
}

TEST_CASE("evaluation errors are numeric, not parse") {
    CHECK_THROWS_AS(ev("1/(n-1)", 1), NumericError);
    CHECK_THROWS_AS(ev("0^-1", 1), NumericError);
    // 1e432 overflows the double range
    CHECK_THROWS_AS(ev("((10^12)^12)^3", 1), NumericError);
}

TEST_CASE("pretty printing round trips structurally") {
    const char* cases[] = {
        "1+2*3", "(1+2)*3", "-2^2", "(-2)^2", "-(n*n)", "n/(n+1)",
        "2+2/n^2", "1 + 1/(2*(n+1)^2) + 1/(2*(n+1)^3)", "--n", "1-(2-3)",
        "n^-3", "2*(3/(4-n))",
    };
    for (const char* src : cases) {
        const auto ast = parse(src);
        const auto reparsed = parse(expr::to_string(ast));
        CHECK_MESSAGE(expr::structurally_equal(*ast, *reparsed), src);
        for (long n = 1; n <= 5; ++n) {
            if (src == std::string("2*(3/(4-n))") && n == 4) continue;
            CHECK(expr::eval(ast, n) == expr::eval(reparsed, n));
        }
    }
}

TEST_CASE("structural equality distinguishes shapes") {
    CHECK(expr::structurally_equal(*parse("1+n"), *parse("1 + n")));
    CHECK_FALSE(expr::structurally_equal(*parse("1+n"), *parse("n+1")));
    CHECK_FALSE(expr::structurally_equal(*parse("n^2"), *parse("n^3")));
}
