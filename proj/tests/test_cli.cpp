#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "hyperfield/errors.hpp"
#include "hyperfield/format.hpp"
#include "hyperfield/parser.hpp"
#include "support/gen.hpp"

using namespace hyperfield;

namespace {

std::vector<std::string> corpus() {
    std::ifstream in(HYPERFIELD_CORPUS);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("parser structure") {
    auto ast = parse("w/(w+1)");
    REQUIRE(ast->kind == Ast::Kind::Div);
    CHECK(ast->lhs->kind == Ast::Kind::Omega);
    CHECK(ast->rhs->kind == Ast::Kind::Add);

    ast = parse("w^(1/2) - 7*eps");
    REQUIRE(ast->kind == Ast::Kind::Sub);
    CHECK(ast->lhs->kind == Ast::Kind::Pow);
    CHECK(ast->lhs->value == Rational(1, 2));
    CHECK(ast->rhs->kind == Ast::Kind::Mul);
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse("w^w"), ExponentNotRational);
    CHECK_THROWS_AS(parse("(w+1)^2"), PowerBaseNotOmega);
    CHECK_THROWS_AS(parse("3^2"), PowerBaseNotOmega);
    CHECK_THROWS_AS(parse("w +"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("w + * 2"), SyntaxError);
    try {
        parse("w + $");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("evaluation") {
    Hyper w = Hyper::omega();
    CHECK(eval_expression("w*eps") == Hyper::from_rational(1));
    CHECK(eval_expression("(2*w^2+w)/(w^2-1)").standard_part() == 2);
    CHECK_THROWS_AS(eval_expression("1/(w-w)"), DivisionByZero);
    CHECK(eval_expression("eps") == w.inv());
    CHECK(eval_expression("eps^(-2)") == w * w);
    CHECK(eval_expression("-w^2") == -(w * w));
    CHECK(eval_expression("2 - 3 - 4") == Hyper::from_rational(-5));
    CHECK(eval_expression("12/4/3") == Hyper::from_rational(1));
    CHECK(eval_expression(" w  /( w + 1 )") == w / (w + Hyper::from_rational(1)));
}

TEST_CASE("human format examples") {
    Hyper one_plus_eps = eval_expression("1 + eps");
    CHECK(format_annotated(one_plus_eps) == "(w + 1)/w   [appreciable, st=1]");
    CHECK(format_human(eval_expression("w^2")) == "w^2");
}

TEST_CASE("json format examples") {
    CHECK(format_json(eval_expression("w^2")) ==
          R"({"num":[["2","1"]],"den":[["0","1"]],"class":"infinite"})");
    CHECK(format_json(eval_expression("1 + eps")) ==
          R"({"num":[["1","1"],["0","1"]],"den":[["1","1"]],"class":"appreciable","st":"1"})");
}

TEST_CASE("round trip on the corpus") {
    auto lines = corpus();
    CHECK(lines.size() == 50);
    for (const auto& line : lines) {
        Hyper x = eval_expression(line);
        CAPTURE(line);
        Hyper back = eval_expression(format_human(x));
        CHECK(back == x);
    }
}

TEST_CASE("round trip on random elements") {
    testgen::Rng rng;
    for (int i = 0; i < 200; ++i) {
        Hyper x = rng.hyper();
        std::string text = format_human(x);
        CAPTURE(text);
        CHECK(eval_expression(text) == x);
    }
}

TEST_CASE("json output is byte-stable") {
    testgen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Hyper x = rng.hyper();
        std::string a = format_json(x);
        Hyper y = eval_expression(format_human(x));
        CHECK(format_json(y) == format_json(y));
        CHECK(a == format_json(x));
    }
}
