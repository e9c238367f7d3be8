#include <string>
#include <vector>

#include "doctest.h"
#include "hhquad/errors.hpp"
#include "hhquad/expr.hpp"

using namespace hhquad;

TEST_SUITE("expr") {

TEST_CASE("x^2 parses to pow(variable, 2)") {
  const Expr e = Expr::parse("x^2");
  const ExprNode& root = e.node(e.root());
  CHECK(root.kind == NodeKind::kPow);
  CHECK(root.exponent == 2);
  CHECK(e.node(root.a).kind == NodeKind::kVariable);
}

TEST_CASE("unbalanced paren reports the offset") {
  try {
    Expr::parse("sin(x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(std::string(e.what()).find("')'") != std::string::npos);
  }
}

TEST_CASE("* binds tighter than +") {
  const Expr e = Expr::parse("2*x + exp(x)");
  const ExprNode& root = e.node(e.root());
  REQUIRE(root.kind == NodeKind::kAdd);
  const ExprNode& lhs = e.node(root.a);
  CHECK(lhs.kind == NodeKind::kMul);
  CHECK(e.node(lhs.a).kind == NodeKind::kConstant);
  CHECK(e.node(lhs.a).value == 2.0);
  CHECK(e.node(lhs.b).kind == NodeKind::kVariable);
  const ExprNode& rhs = e.node(root.b);
  CHECK(rhs.kind == NodeKind::kExp);
  CHECK(e.node(rhs.a).kind == NodeKind::kVariable);
}

TEST_CASE("eval_real basics") {
  CHECK(eval_real(Expr::parse("x^2"), 0.5) == 0.25);
  CHECK(eval_real(Expr::parse("exp(x)"), 0.0) == 1.0);
  CHECK(eval_real(Expr::parse("2*x + exp(x)"), 0.0) == 1.0);
  CHECK(eval_real(Expr::parse("sqrt(x)"), 9.0) == 3.0);
  CHECK(eval_real(Expr::parse("x/2 - 1"), 6.0) == 2.0);
}

TEST_CASE("domain errors identify the offending node") {
  try {
    eval_real(Expr::parse("1/x"), 0.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("division by zero") != std::string::npos);
    CHECK(msg.find("offset 1") != std::string::npos);
  }
  CHECK_THROWS_AS(eval_real(Expr::parse("log(x)"), 0.0), DomainError);
  CHECK_THROWS_AS(eval_real(Expr::parse("log(x)"), -1.0), DomainError);
  CHECK_THROWS_AS(eval_real(Expr::parse("sqrt(x)"), -4.0), DomainError);
  CHECK_THROWS_AS(eval_real(Expr::parse("x^-1"), 0.0), DomainError);
}

TEST_CASE("unknown identifiers and malformed input") {
  CHECK_THROWS_AS(Expr::parse("tan(x)"), ParseError);
  CHECK_THROWS_AS(Expr::parse("y"), ParseError);
  CHECK_THROWS_AS(Expr::parse(""), ParseError);
  CHECK_THROWS_AS(Expr::parse("   "), ParseError);
  CHECK_THROWS_AS(Expr::parse("x +"), ParseError);
  CHECK_THROWS_AS(Expr::parse("(x"), ParseError);
  CHECK_THROWS_AS(Expr::parse("x)"), ParseError);
  CHECK_THROWS_AS(Expr::parse("2x"), ParseError);
  CHECK_THROWS_AS(Expr::parse("exp x"), ParseError);
  CHECK_THROWS_AS(Expr::parse("x^2^3"), ParseError);
  CHECK_THROWS_AS(Expr::parse("."), ParseError);

  try {
    Expr::parse("tan(x)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("tan") != std::string::npos);
    CHECK(e.offset() == 0);
  }
}

TEST_CASE("non-integer exponents are rejected") {
  try {
    Expr::parse("x^2.5");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("non-integer exponent") != std::string::npos);
  }
  CHECK_THROWS_AS(Expr::parse("x^1e3"), ParseError);
  CHECK_THROWS_AS(Expr::parse("x^"), ParseError);
  CHECK_NOTHROW(Expr::parse("x^-2"));
  CHECK(eval_real(Expr::parse("x^-2"), 2.0) == 0.25);
}

TEST_CASE("number literal forms") {
  CHECK(eval_real(Expr::parse("1e3"), 0.0) == 1000.0);
  CHECK(eval_real(Expr::parse("2.5E-1"), 0.0) == 0.25);
  CHECK(eval_real(Expr::parse(".5"), 0.0) == 0.5);
  CHECK(eval_real(Expr::parse("0.5e+1"), 0.0) == 5.0);
  CHECK(eval_real(Expr::parse("7."), 0.0) == 7.0);
}

TEST_CASE("unary minus binds at the atom level") {
  // Per the grammar, -x^2 is (-x)^2, and -x*y is (-x)*y.
  CHECK(eval_real(Expr::parse("-x^2"), 3.0) == 9.0);
  CHECK(eval_real(Expr::parse("-(x^2)"), 3.0) == -9.0);
  CHECK(eval_real(Expr::parse("-x + 1"), 3.0) == -2.0);
  CHECK(eval_real(Expr::parse("--x"), 3.0) == 3.0);
  CHECK(eval_real(Expr::parse("2*-x"), 3.0) == -6.0);
  CHECK(eval_real(Expr::parse("2 - -x"), 3.0) == 5.0);
}

TEST_CASE("whitespace is insignificant") {
  const Expr a = Expr::parse("2*x+exp(x)");
  const Expr b = Expr::parse("  2 * x\t+ exp( x )  ");
  CHECK(a.identical(b));
}

TEST_CASE("deep nesting is rejected with a clear error") {
  std::string deep;
  for (int i = 0; i < 400; ++i) deep += "(";
  deep += "x";
  for (int i = 0; i < 400; ++i) deep += ")";
  try {
    Expr::parse(deep);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("nested") != std::string::npos);
  }
}

TEST_CASE("print-of-parse is a fixed point on a 50-case corpus") {
  const std::vector<std::string> corpus = {
      "x",
      "0",
      "1.5",
      ".5",
      "1e3",
      "2.5E-2",
      "x^2",
      "x^-2",
      "x^0",
      "-x",
      "--x",
      "-(x + 1)",
      "-x^2",
      "(-x)^2",
      "(x^2)^3",
      "x + 1",
      "x - 1",
      "1 - x - 2",
      "x - (1 - x)",
      "x + (1 + x)",
      "2*x",
      "2*x + 1",
      "2*(x + 1)",
      "x/2",
      "1/(1 + x^2)",
      "x/2/3",
      "x/(2/3)",
      "x*(2*x)",
      "(2*x)*x",
      "x - -x",
      "2*-x",
      "exp(x)",
      "log(x + 2)",
      "sin(x)",
      "cos(x)",
      "sqrt(x + 1)",
      "exp(-x^2)",
      "sin(2*x + 1)",
      "cos(x)^2 + sin(x)^2",
      "exp(log(x + 3))",
      "sqrt(x^2 + 1)",
      "x^2 - 2*x + 1",
      "3*x^6 + 2*x^3 - x",
      "(x + 1)*(x - 1)",
      "(x + 1)/(x - 1)",
      "exp(x)*sin(x)",
      "1 + 2 + 3 + x",
      "1*2*3*x",
      "x^2/(1 + exp(-x))",
      "sin(cos(exp(x)))",
  };
  CHECK(corpus.size() == 50);
  for (const std::string& text : corpus) {
    CAPTURE(text);
    const Expr first = Expr::parse(text);
    const std::string printed = first.to_string();
    const Expr second = Expr::parse(printed);
    CHECK(first.identical(second));
    CHECK(second.to_string() == printed);
  }
}

TEST_CASE("children precede parents in the arena") {
  const Expr e = Expr::parse("2*x + exp(x^2) - sin(x)/x");
  for (int i = 0; i < e.size(); ++i) {
    const ExprNode& n = e.node(i);
    if (n.a >= 0) CHECK(n.a < i);
    if (n.b >= 0) CHECK(n.b < i);
  }
  CHECK(e.root() == e.size() - 1);
}

}  // TEST_SUITE
