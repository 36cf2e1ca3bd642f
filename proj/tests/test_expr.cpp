#include "qint/expr.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace qint;

namespace {

std::string display(const std::string& src) {
  Expr e = parse_expr(src);
  Value v = eval_expr(e);
  return render_display(e, v);
}

Value value_of(const std::string& src) { return eval_expr(parse_expr(src)); }

}  // namespace

TEST_CASE("quantum operator results carry the index prefix") {
  CHECK(display("qint(2) (*) qint(3)") == "[6]_q = 1 + q + q^2 + q^3 + q^4 + q^5");
  CHECK(display("qint(0) (+) qint(7)") ==
        "[7]_q = 1 + q + q^2 + q^3 + q^4 + q^5 + q^6");
  CHECK(display("qint(2) (+) qrat(1,2)") == "[5/2]_q = (1 - q^(5/2))/(1 - q)");
  CHECK(display("qrat(1,2) (*) qrat(2,3)") == "[1/3]_q = (1 - q^(1/3))/(1 - q)");
}

TEST_CASE("literal quantum values render bare") {
  CHECK(display("qint(-2)") == "-q^(-1) - q^(-2)");
  CHECK(display("qint(3)") == "1 + q + q^2");
  CHECK(display("qrat(1,2)") == "(1 - q^(1/2))/(1 - q)");
  CHECK(display("(qint(2) (*) qint(3))") == "[6]_q = 1 + q + q^2 + q^3 + q^4 + q^5");
}

TEST_CASE("set operators follow the documented precedence") {
  CHECK(display("{0,1} + {0,2}") == "{0, 1, 2, 3}");
  CHECK(display("3*[4]") == "{0, 3, 6, 9}");
  CHECK(display("-1 * {0, 1}") == "{-1, 0}");
  CHECK(display("2 t+ [3]") == "{2, 3, 4}");
  CHECK(display("[3] u {5}") == "{0, 1, 2, 5}");
  CHECK(display("{0,1} (+) {0,2}") == "{0, 1, 2, 3}");
  CHECK(display("1 t+ 2*[2]") == "{1, 3}");
  CHECK(display("1 t+ 2 t+ [2]") == "{3, 4}");
  CHECK(display("[2] + [3] u {9}") == "{0, 1, 2, 3, 9}");
  CHECK(display("{}") == "{}");
  CHECK(display("{ -1, 2 }") == "{-1, 2}");
}

TEST_CASE("polynomial and scalar arithmetic") {
  CHECK(display("2 + 3") == "5");
  CHECK(display("4/2") == "2");
  CHECK(display("1/2 + 1/3") == "5/6");
  CHECK(display("2 - 2/4") == "3/2");
  CHECK(display("(1+q)^2") == "1 + 2*q + q^2");
  CHECK(display("q^(-1)") == "q^(-1)");
  CHECK(display("q^(1/2)") == "q^(1/2)");
  CHECK(display("- q + q") == "0");
  CHECK(display("(1 - q)*(1 + q)") == "1 - q^2");
  CHECK(display("subst(1 + q, 1/2)") == "1 + q^(1/2)");
  CHECK(display("genfun({ -1, 2 })") == "q^2 + q^(-1)");
}

TEST_CASE("the interval decomposition identity holds inside the language") {
  FracPoly whole = std::get<FracPoly>(value_of("genfun([12])"));
  FracPoly split = std::get<FracPoly>(value_of("genfun([3]) * subst(genfun([4]), 3)"));
  CHECK(whole == split);
  CHECK(std::get<IntSet>(value_of("[3] (+) 3*[4]")) ==
        std::get<IntSet>(value_of("[12]")));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse_expr("qint(2"), "parse error at byte 6: expected ')'",
                       ParseError);
  try {
    parse_expr("qint(2");
  } catch (const ParseError& e) {
    CHECK(e.offset == 6);
  }
  CHECK_THROWS_AS(parse_expr("1 +"), ParseError);
  CHECK_THROWS_AS(parse_expr("qint 2"), ParseError);
  CHECK_THROWS_AS(parse_expr("qint(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(1)"), ParseError);
  CHECK_THROWS_AS(parse_expr("{0, q}"), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("1 ~ 2"), ParseError);
}

TEST_CASE("type errors carry node paths") {
  CHECK_THROWS_WITH_AS(parse_expr("1 (+) 2"),
                       "type error at $: '(+)' applies to two quantum numbers or "
                       "two sets, found an integer and an integer",
                       TypeError);
  CHECK_THROWS_WITH_AS(parse_expr("genfun(qint(2))"),
                       "type error at $.arg1: genfun takes a set", TypeError);
  CHECK_THROWS_WITH_AS(parse_expr("(1/2) * [3]"),
                       "type error at $: dilation count must be an integer", TypeError);
  CHECK_THROWS_AS(parse_expr("qint(2) + [3]"), TypeError);
  CHECK_THROWS_AS(parse_expr("q * [3]"), TypeError);
  CHECK_THROWS_AS(parse_expr("qint(q)"), TypeError);
  CHECK_THROWS_AS(parse_expr("2 t+ 3"), TypeError);
  CHECK_THROWS_AS(parse_expr("-{0}"), TypeError);
  CHECK_THROWS_AS(parse_expr("q ^ q"), TypeError);
}

TEST_CASE("evaluation errors carry node paths") {
  CHECK_NOTHROW(parse_expr("qrat(1,0)"));
  CHECK_THROWS_WITH_AS(value_of("qrat(1,0)"), "error at $: undefined quantum number",
                       EvalError);
  CHECK_THROWS_WITH_AS(value_of("0*[3]"), "error at $: degenerate dilation", EvalError);
  CHECK_THROWS_WITH_AS(value_of("[0]"), "error at $: interval size must be positive",
                       EvalError);
  CHECK_THROWS_WITH_AS(value_of("{0,1} (+) {0,1}"),
                       "error at $: sumset is not direct: 1 = 0+1 = 1+0", EvalError);
  CHECK_THROWS_WITH_AS(value_of("subst(1 + q, 0)"),
                       "error at $: substitution exponent must be nonzero", EvalError);
  CHECK_THROWS_AS(value_of("genfun([2]) ^ (1/2)"), EvalError);
  CHECK_THROWS_AS(value_of("qint(2000000)"), EvalError);
}

TEST_CASE("flag text parsers enforce the result type") {
  CHECK(parse_poly_text("1+q") ==
        FracPoly::from_terms({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}));
  CHECK(parse_poly_text("0").is_zero());
  CHECK(parse_poly_text("3/2").terms()[0].coefficient == make_rational(3, 2));
  CHECK_THROWS_AS(parse_poly_text("[3]"), TypeError);
  CHECK(parse_set_text("{0, 2}") == IntSet::from_elements({0, 2}));
  CHECK(parse_set_text("[5]") == IntSet::from_elements({0, 1, 2, 3, 4}));
  CHECK_THROWS_AS(parse_set_text("1+q"), TypeError);
}

TEST_CASE("renderings parse back to the same value") {
  std::mt19937 rng(0x5eed0006u);
  std::uniform_int_distribution<int> elem(-30, 30);
  std::uniform_int_distribution<int> size(0, 7);
  for (int i = 0; i < 60; ++i) {
    FracPoly p = oracle::random_poly(rng, i % 2 == 1);
    std::string text = to_string(p);
    CHECK(render_value(value_of(text)) == text);

    std::vector<long long> xs;
    const int k = size(rng);
    for (int j = 0; j < k; ++j) {
      xs.push_back(elem(rng));
    }
    IntSet s = IntSet::from_elements(std::move(xs));
    std::string set_text = to_string(s);
    CHECK(render_value(value_of(set_text)) == set_text);
  }
  CHECK(render_value(value_of("-7")) == "-7");
  CHECK(render_value(value_of("-2/3")) == "-2/3");
}
