#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace testing;

namespace {

Expr P(const char* text, std::set<std::string> vocab = {"x", "y", "yp", "alpha", "u", "x1", "x2", "r", "s", "c"}) {
  return parse_expr(text, vocab);
}

}  // namespace

TEST_CASE("parse keeps exact rationals and builds canonical sums") {
  const Expr e = P("(1+x)*yp^2 + yp");
  CHECK(e.is_sum());
  CHECK(e == P("yp + yp^2 + x*yp^2"));
  CHECK(normalize(e) == e);

  CHECK(P("0").is_zero());

  const Expr q = P("u^(-4/3)");
  REQUIRE(q.is_power());
  CHECK(q.exponent() == Rational(-4, 3));
  CHECK(q.base() == P("u"));

  CHECK(P("0.25") == Expr(Rational(1, 4)));
  CHECK(P("1.5e2") == Expr(150));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("2 x"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
  CHECK_THROWS_AS(P("foo(x)"), ParseError);
  try {
    P("x + z");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
}

TEST_CASE("diff") {
  CHECK(diff(P("(1+x)*alpha^2 + alpha"), "alpha") == P("2*(1+x)*alpha + 1"));
  CHECK(equiv(diff(P("exp(-x2)*log(u)"), "u"), P("exp(-x2)/u")));
  CHECK(diff(P("c"), "x").is_zero());
  CHECK(diff(P("u^(-4/3)"), "u") == P("-4/3*u^(-7/3)"));
}

TEST_CASE("substitute") {
  const JetSpace s = pde2(1);
  const Expr e = s.parse("x1*u_1 + 2*x2*u_2 - u");
  CHECK(substitute(P("yp*x"), {{"yp", P("alpha")}}) == P("alpha*x"));
  CHECK(substitute(e, {}) == e);
  // u = x1 * r2, u_1 = r2 + x1 * r2_1 style substitution collapses the denominator
  const Expr d = substitute(e, {{"u_1", s.parse("u/x1")}, {"u_2", Expr(0)}});
  CHECK(d.is_zero());
}

TEST_CASE("equiv") {
  CHECK(equiv(P("y + x*yp - 2*x*yp"), P("y - x*yp")));
  CHECK_FALSE(equiv(P("x"), P("x + 1")));
  // numeric path: exp(log(x)) is not folded structurally
  CHECK(equiv(P("exp(2*log(x))"), P("x^2")));
}

TEST_CASE("eval_numeric") {
  const Expr e = P("1/(exp(-x) - x)");
  const double oracle = 1.0 / (std::exp(-0.5) - 0.5);
  CHECK(eval_numeric(e, {{"x", 0.5}}) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(eval_numeric(e, {{"x", 0.5}}) == doctest::Approx(9.38696899744638).epsilon(1e-12));
  CHECK(eval_numeric(Expr(0), {{"x", 1.0}}) == 0.0);
  CHECK(eval_numeric(P("x^2"), {{"x", 3.0}}) == 9.0);
  CHECK_THROWS_AS(eval_numeric(P("log(x)"), {{"x", -1.0}}), DomainError);
  CHECK_THROWS_AS(eval_numeric(P("x"), {}), DomainError);
}

TEST_CASE("free_vars") {
  CHECK(free_vars(P("r*exp(s)")) == std::set<std::string>{"r", "s"});
  CHECK(free_vars(P("y - y")).empty());
  CHECK(free_vars(P("2*(1+x)*alpha + 1")) == std::set<std::string>{"alpha", "x"});
}

TEST_CASE("rendering round trips through the parser") {
  for (const char* t : {"(1+x)*yp^2 + yp", "u^(-4/3)*exp(-x2)", "-r/2", "log(x) - 1/(exp(-x) - x)"}) {
    const Expr e = P(t);
    CHECK(P(render(e).c_str()) == e);
  }
}

TEST_CASE("shared negative powers leave sum content") {
  const Expr e = P("(r + 1/s + 2*alpha*x/s)^(4/3)");
  CHECK(equiv(e, P("s^(-4/3)*(1 + 2*alpha*x + s*r)^(4/3)")));
}
