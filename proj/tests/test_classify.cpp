#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

struct Abel {
  JetSpace o = ode(2);
  DESystem sys = system(o, {"x*y^2*y'' + x*y' - y"});
  std::vector<AuxDef> aux{{"alpha", JetVar{0, {0}}}};

  PointTransformation chart(std::initializer_list<const char*> fwd, std::initializer_list<const char*> inv) const {
    const JetSpace t({"r"}, {"s"}, 2);
    std::vector<Expr> f, g;
    for (const char* e : fwd) f.push_back(o.parse(e));
    for (const char* e : inv) g.push_back(t.parse(e));
    return make_transformation(o, {"r"}, {"s"}, f, g);
  }
};

}  // namespace

TEST_CASE("classify_pushforward on both charts") {
  Abel a;
  const auto c1 = a.chart({"y/x", "-1/x"}, {"-1/s", "-r/s"});
  const auto c2 = a.chart({"y^2/x", "log(x)"}, {"exp(s)", "(r*exp(s))^(1/2)"});
  const ReducedSystem r1 = reduce(transform_de(a.sys, c1), "s", {"alpha"});
  const ReducedSystem r2 = reduce(transform_de(a.sys, c2), "s", {"alpha"});

  const VectorField X1 = field(a.o, "x: x^2; y: x*y");
  const VectorField X2 = field(a.o, "x: x; y: y/2");
  const Classification k1 = classify_pushforward(X2, c1, a.aux, r1);
  CHECK(k1.verdict == Verdict::point);
  CHECK(k1.coefficients[0] == r1.system.space().parse("-r/2"));

  const Classification k2 = classify_pushforward(X1, c2, a.aux, r2);
  CHECK(k2.verdict == Verdict::nonlocal);
  CHECK(k2.witness == "s");

  // rescaling keeps the verdict
  CHECK(classify_pushforward(scale(X2, 3), c1, a.aux, r1).verdict == Verdict::point);
  CHECK(classify_pushforward(scale(X1, -1), c2, a.aux, r2).witness == "s");

  // the chart's own field dies on the reduced system
  const Classification k3 = classify_pushforward(X1, c1, a.aux, r1);
  CHECK(k3.verdict == Verdict::point);
  for (const auto& c : k3.coefficients) CHECK(c.is_zero());
}

TEST_CASE("lift_test on the reduced Bernoulli equation") {
  const JetSpace o = ode(2);
  const ReducedSystem r = reduce_ode(system(o, {"y'' - (1+x)*y'^2 - y'"}));
  const JetSpace a = r.system.space();
  const Classification y = lift_test(field(a, "alpha: alpha*(1 + x*alpha)"), r);
  CHECK(y.verdict == Verdict::nonlocal);
  CHECK(y.criterion.find("gradient-affinity") == 0);
  CHECK(lift_test(field(a, "alpha: 0"), r).verdict == Verdict::point);
  CHECK(lift_test(field(a, "alpha: 3*alpha*(1 + x*alpha)"), r).verdict == Verdict::nonlocal);
  // not a symmetry of the reduced equation
  CHECK_THROWS_AS(lift_test(field(a, "x: 1"), r), PreconditionError);
}

TEST_CASE("lift_test finds point lifts") {
  // y''' = y'*y'' admits x d/dx - y d/dy ... reduced by y: alpha'' = alpha*alpha'
  const JetSpace o = ode(3);
  const ReducedSystem r = reduce_ode(system(o, {"y''' - y'*y''"}));
  const JetSpace a = r.system.space();
  const Classification t = lift_test(field(a, "x: 1"), r);
  CHECK(t.verdict == Verdict::point);
  const Classification sc = lift_test(field(a, "x: x; alpha: -alpha"), r);
  CHECK(sc.verdict == Verdict::point);
  CHECK(sc.criterion == "gradient-affinity: lifts with eta = A(x)");
}

TEST_CASE("lift_test on the diffusion system") {
  const JetSpace s = pde2(2);
  const ReducedSystem r = reduce_pde(system(s, {"u_2 - u_1^(-4/3)*u_11"}), "u");
  const JetSpace ab = r.system.space();
  const VectorField Y = field(ab, "x1: x1^2; alpha: -3*x1*alpha; beta: -(3*alpha^(-1/3) + x1*beta)");
  CHECK(check_point_symmetry(r.system, Y).symmetry);
  CHECK(lift_test(Y, r).verdict == Verdict::nonlocal);
  CHECK(lift_test(field(ab, "x1: x1; x2: 2*x2; beta: -beta"), r).verdict == Verdict::point);
  CHECK(lift_test(field(ab, "x1: 2*x1; alpha: -3*alpha; beta: -beta"), r).verdict == Verdict::point);
}
