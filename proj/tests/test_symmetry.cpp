#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("point symmetries of the Bernoulli-type equation") {
  const JetSpace o = ode(2);
  const DESystem sys = system(o, {"y'' - (1+x)*y'^2 - y'"});
  CHECK(check_point_symmetry(sys, field(o, "y: 1")).symmetry);
  const auto bad = check_point_symmetry(sys, field(o, "y: x"));
  CHECK_FALSE(bad.symmetry);
  REQUIRE(bad.residuals.size() == 1);
  CHECK(equiv(bad.residuals[0], o.parse("-2*(1+x)*y' - 1")));
}

TEST_CASE("five point symmetries of the nonlinear diffusion equation") {
  const JetSpace s = pde2(2);
  const DESystem sys = system(s, {"u_2 - u_1^(-4/3)*u_11"});
  for (const char* f : {"u: 1", "x1: x1; x2: 2*x2; u: u", "x1: 1", "x2: 1", "x1: 2*x1; u: -u"}) {
    CAPTURE(f);
    CHECK(check_point_symmetry(sys, field(s, f)).symmetry);
  }
  CHECK_FALSE(check_point_symmetry(sys, field(s, "x1: x2")).symmetry);
}

TEST_CASE("verdict does not change when the equation is rescaled") {
  const JetSpace o = ode(2);
  const DESystem a = system(o, {"x*y^2*y'' + x*y' - y"});
  const DESystem b = system(o, {"(x*y^2*y'' + x*y' - y)*(1 + x^2)*exp(y)"});
  for (const char* f : {"x: x^2; y: x*y", "x: x; y: y/2", "y: 1", "x: 1"}) {
    CAPTURE(f);
    CHECK(check_point_symmetry(a, field(o, f)).symmetry == check_point_symmetry(b, field(o, f)).symmetry);
  }
}

TEST_CASE("solved forms") {
  const JetSpace o = ode(2);
  const DESystem sys = system(o, {"y'' - (1+x)*y'^2 - y'"});
  const auto& eq = sys.equations()[0];
  CHECK(o.jet_name(eq.leader) == "y''");
  CHECK(equiv(substitute(eq.expr, {{"y''", eq.rhs}}), Expr(0)));
  CHECK(sys.on_manifold(o.parse("y'''")) ==
        sys.on_manifold(total_derivative(o, o.parse("(1+x)*y'^2 + y'"), 0)));
  CHECK_THROWS_AS(system(o, {"exp(y'')"}), PreconditionError);
}

TEST_CASE("verify_solution") {
  const JetSpace o = ode(2);
  CHECK(verify_solution(system(o, {"y'' - (1+x)*y'^2 - y'"}), {{"y", o.parse("-log(x)")}}));
  CHECK_FALSE(verify_solution(system(o, {"y'' - (1+x)*y'^2 - y'"}), {{"y", o.parse("log(x)")}}));
  const JetSpace a = ode(1, "x", "alpha");
  CHECK(verify_solution(system(a, {"alpha' - (1+x)*alpha^2 - alpha"}), {{"alpha", a.parse("1/(exp(-x) - x)")}}));
  const JetSpace s({"x1", "x2"}, {"alpha", "beta"}, 1);
  const DESystem red = system(s, {"alpha_1 - beta + exp(x2)*alpha^2", "alpha_2 - beta_1"});
  CHECK(verify_solution(red, {{"alpha", s.parse("-x1*exp(-x2)/2")}, {"beta", s.parse("(x1^2 - 2)*exp(-x2)/4")}}));
}

TEST_CASE("a translated solution still solves an x-free equation") {
  const JetSpace o = ode(2);
  const DESystem sys = system(o, {"y'' + y'^2"});
  for (const char* c : {"0", "1", "3/2"}) {
    const Expr shift = o.parse(c);
    CHECK(verify_solution(sys, {{"y", substitute(o.parse("log(x)"), {{"x", o.parse("x") + shift}})}}));
  }
}
