#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("reduce_ode") {
  const JetSpace o = ode(2);
  const ReducedSystem r = reduce_ode(system(o, {"y'' - (1+x)*y'^2 - y'"}));
  const JetSpace a = ode(1, "x", "alpha");
  CHECK(r.system.order() == 1);
  CHECK(r.integrability_count() == 0);
  CHECK(same_system(r.system, system(a, {"alpha' - (1+x)*alpha^2 - alpha"})));
  CHECK(r.connection.eliminated == "y");
  CHECK(r.connection.definitions[0] == o.parse("y'"));

  const JetSpace b = ode(3);
  const ReducedSystem rb = reduce_ode(system(b, {"2*y'*y''' - 6*y''^2 + x*y'^2*y''"}));
  CHECK(rb.system.order() == 2);
  CHECK(same_system(rb.system, system(ode(2, "x", "alpha"), {"2*alpha*alpha'' - 6*alpha'^2 + x*alpha^2*alpha'"})));

  const JetSpace rs = ode(2, "r", "s");
  const ReducedSystem rc = reduce_ode(system(rs, {"r^2*s'' - s'^2"}));
  CHECK(same_system(rc.system, system(ode(1, "r", "alpha"), {"r^2*alpha' - alpha^2"})));
}

TEST_CASE("reduce_ode to an algebraic equation") {
  const JetSpace o = ode(1, "R", "S");
  const ReducedSystem r = reduce_ode(system(o, {"1 + R*(1-R)*S'"}), "omega");
  CHECK(r.system.order() == 0);
  CHECK(r.system.equations()[0].expr == JetSpace({"R"}, {"omega"}, 0).parse("1 + R*omega - R^2*omega"));
}

TEST_CASE("reduction preconditions") {
  const JetSpace o = ode(2);
  CHECK_THROWS_AS(reduce_ode(system(o, {"y'' - y"})), PreconditionError);
  CHECK_THROWS_AS(reduce_pde(system(o, {"y'' - y'"}), "y"), PreconditionError);
  CHECK_THROWS_AS(reduce_ode(system(pde2(2), {"u_11 - u_2"})), PreconditionError);
}

TEST_CASE("reduce_pde with two variables") {
  const JetSpace s = pde2(2);
  const JetSpace ab({"x1", "x2"}, {"alpha", "beta"}, 1);
  const ReducedSystem r = reduce_pde(system(s, {"u_11 - u_2 + exp(x2)*u_1^2"}), "u");
  CHECK(r.integrability_count() == 1);
  CHECK(r.system.space().dependent() == std::vector<std::string>{"alpha", "beta"});
  CHECK(r.system.equations()[0].expr == ab.parse("alpha_1 - beta + exp(x2)*alpha^2"));
  CHECK(r.system.equations()[1].expr == ab.parse("alpha_2 - beta_1"));
  CHECK(r.system.equations()[1].role == Role::integrability);

  const ReducedSystem d = reduce_pde(system(s, {"u_2 - u_1^(-4/3)*u_11"}), "u");
  CHECK(d.system.equations()[0].expr == ab.parse("beta - alpha^(-4/3)*alpha_1"));
  CHECK(d.system.order() == 1);
}

TEST_CASE("mixed derivatives use the smallest base index") {
  const JetSpace s = pde2(2);
  const ReducedSystem r = reduce_pde(system(s, {"u_12 + u_22"}), "u");
  const JetSpace ab({"x1", "x2"}, {"alpha", "beta"}, 1);
  CHECK(r.system.equations()[0].expr == ab.parse("alpha_2 + beta_2"));
}

TEST_CASE("integrability counts") {
  for (int p : {3, 4, 5, 6}) {
    std::vector<std::string> xs;
    std::string lap;
    for (int i = 1; i <= p; ++i) {
      xs.push_back("x" + std::to_string(i));
      lap += (i > 1 ? " + u_" : "u_") + std::to_string(i) + std::to_string(i);
    }
    const JetSpace s(xs, {"u"}, 2);
    const ReducedSystem r = reduce_pde(DESystem(s, {s.parse(lap)}), "u");
    CHECK(r.integrability_count() == p * (p - 1) / 2);
    for (const auto& eq : r.system.equations()) CHECK_FALSE(depends_on(eq.expr, "u"));
  }
}

TEST_CASE("reduction keeps the other dependent variables") {
  const JetSpace s({"r1", "r2"}, {"s1", "s2"}, 2);
  const DESystem sys(s, {s.parse("s1_11 - s2_2*s1_2"), s.parse("s2_1 - s1_1*s2")});
  const ReducedSystem r = reduce_pde(sys, "s1", {"delta", "omega"});
  CHECK(r.system.space().dependent() == std::vector<std::string>{"delta", "omega", "s2"});
  CHECK(r.integrability_count() == 1);
}

TEST_CASE("round trip through a polynomial gradient") {
  const JetSpace o = ode(2);
  const DESystem sys = system(o, {"y'' - 3*x^2 + 2"});
  const ReducedSystem r = reduce_ode(sys);
  const Expr P = o.parse("x^3 - 2*x + 5");
  CHECK(verify_solution(r.system, {{"alpha", P}}));
}

TEST_CASE("verify_connection") {
  const JetSpace o = ode(2);
  const ReducedSystem r = reduce_ode(system(o, {"y'' - (1+x)*y'^2 - y'"}));
  const JetSpace a = ode(1, "x", "alpha");
  auto c = verify_connection(r, Candidate{{"y", o.parse("-log(x)")}}, Candidate{{"alpha", a.parse("-1/x")}}, {});
  CHECK(c.ok);
  c = verify_connection(r, std::nullopt, Candidate{{"alpha", a.parse("1/(exp(-x) - x)")}}, {});
  CHECK(c.ok);
  c = verify_connection(r, Candidate{{"y", o.parse("log(x)")}}, std::nullopt, {});
  CHECK_FALSE(c.ok);
  CHECK_THROWS_AS(verify_connection(r, std::nullopt, std::nullopt, {}), PreconditionError);

  const JetSpace s = pde2(2);
  const ReducedSystem q = reduce_pde(system(s, {"u_11 - u_2 + exp(x2)*u_1^2"}), "u");
  const JetSpace ab({"x1", "x2"}, {"alpha", "beta"}, 1);
  c = verify_connection(q, std::nullopt,
                        Candidate{{"alpha", ab.parse("-x1*exp(-x2)/2")}, {"beta", ab.parse("(x1^2 - 2)*exp(-x2)/4")}},
                        s.parse("(2 - x1^2)*exp(-x2)/4"));
  CHECK(c.ok);
  CHECK(c.notes.size() == 5);
  c = verify_connection(q, Candidate{{"u", s.parse("x1 + exp(x2)")}},
                        Candidate{{"alpha", Expr(1)}, {"beta", ab.parse("exp(x2)")}}, {});
  CHECK(c.ok);
  // an antiderivative off by a non-constant term fails
  c = verify_connection(q, std::nullopt,
                        Candidate{{"alpha", ab.parse("-x1*exp(-x2)/2")}, {"beta", ab.parse("(x1^2 - 2)*exp(-x2)/4")}},
                        s.parse("(2 - x1^2)*exp(-x2)/4 + x1"));
  CHECK_FALSE(c.ok);
}
