#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("commutators") {
  const JetSpace o = ode(2);
  const VectorField X1 = field(o, "y: 1");
  const VectorField X2 = field(o, "x: x; y: -y");
  CHECK(same_field(commutator(X1, X2), scale(X1, -1)));
  CHECK(same_field(commutator(X1, X1), field(o, "")));

  const JetSpace s = pde2(2);
  CHECK(same_field(commutator(field(s, "u: 1"), field(s, "x1: x1; x2: 2*x2; u: u")), field(s, "u: 1")));
}

TEST_CASE("bracket of the Abel pair") {
  // oracle: [A, B]_v = A(B_v) - B(A_v) by hand
  //   x: (x^2)(1) - (x)(2x)                 = -x^2
  //   y: (xy)(1/2) - (x)(y) - (y/2)(x)           = -x*y
  const JetSpace o = ode(2);
  const VectorField A = field(o, "x: x^2; y: x*y");
  const VectorField B = field(o, "x: x; y: y/2");
  const VectorField C = commutator(A, B);
  CHECK(C.xi[0] == o.parse("-x^2"));
  CHECK(C.eta[0] == o.parse("-x*y"));
  auto c = express_in_span(C, {A, B});
  REQUIRE(c);
  CHECK((*c)[0] == -1);
  CHECK((*c)[1] == 0);
}

TEST_CASE("structure constants of the diffusion algebra") {
  const JetSpace s = pde2(2);
  std::vector<VectorField> g;
  for (const char* f : {"u: 1", "x1: x1; x2: 2*x2; u: u", "x1: 1", "x2: 1", "x1: 2*x1; u: -u"}) {
    g.push_back(field(s, f));
  }
  const AlgebraTable t = structure_constants(g);
  REQUIRE(t.closed());
  CHECK(t.render_combination(t.brackets[2][4].coefficients) == "2*X3");
  CHECK(t.render_combination(t.brackets[0][4].coefficients) == "-1*X1");
  CHECK(t.render_combination(t.brackets[4][1].coefficients) == "0");
  CHECK(t.render_combination(t.brackets[0][1].coefficients) == "1*X1");
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) CHECK(t.brackets[i][j].coefficients[k] == -t.brackets[j][i].coefficients[k]);
    }
  }
  const Solvability sv = derived_series(t);
  CHECK(sv.solvable);
  CHECK(sv.derived_series == std::vector<int>{5, 3, 0});
}

TEST_CASE("abelian and non-closed tables") {
  const JetSpace o = ode(2);
  const AlgebraTable ab = structure_constants({field(o, "x: 1"), field(o, "y: 1")});
  CHECK(ab.closed());
  CHECK(derived_series(ab).derived_series == std::vector<int>{2, 0});
  const OrderAdvice adv = reduction_order_advice(ab, 0, 1);
  CHECK(adv.abelian);

  const AlgebraTable open = structure_constants({field(o, "x: 1"), field(o, "x: x^2")});
  CHECK_FALSE(open.closed());
  CHECK_THROWS_AS(derived_series(open), PreconditionError);
  CHECK_FALSE(express_in_span(field(o, "x: x"), {field(o, "x: 1")}));
}

TEST_CASE("reduction order advice") {
  const JetSpace o = ode(3);
  const AlgebraTable t = structure_constants({field(o, "y: 1"), field(o, "x: x; y: -y")});
  const OrderAdvice a = reduction_order_advice(t, 0, 1);
  CHECK_FALSE(a.abelian);
  CHECK(a.first == 0);
  CHECK(a.second == 1);

  const AlgebraTable u = structure_constants({field(o, "x: x; y: -y"), field(o, "y: 1")});
  CHECK(reduction_order_advice(u, 0, 1).first == 1);

  const JetSpace e = ode(2);
  const AlgebraTable sl = structure_constants({field(e, "x: 1"), field(e, "x: x"), field(e, "x: x^2")});
  CHECK_THROWS_AS(reduction_order_advice(sl, 0, 2), PreconditionError);
}
