#include "liereduce/classify.hpp"

#include "liereduce/errors.hpp"

namespace liereduce {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::point:
      return "point";
    case Verdict::nonlocal:
      return "nonlocal";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Classification classify_pushforward(const VectorField& X, const PointTransformation& T,
                                    const std::vector<AuxDef>& aux, const ReducedSystem& reduced,
                                    const SampleConfig& config) {
  Classification out;
  const Pushforward pf = pushforward_field(X, T, aux);
  out.coordinates = pf.coordinates;
  out.coefficients = pf.coefficients;
  const std::string s = T.canonical_name();
  for (const auto& c : pf.coefficients) {
    if (depends_on(c, s)) {
      out.verdict = Verdict::nonlocal;
      out.witness = s;
      out.criterion = "coefficient depends on the canonical coordinate";
      return out;
    }
  }
  if (pf.raw) {
    out.criterion = "coefficients could not be re-expressed";
    for (const auto& v : pf.leftover) out.witness += (out.witness.empty() ? "" : ",") + v;
    return out;
  }
  const JetSpace& rs = reduced.system.space();
  std::vector<std::string> coords = rs.independent();
  coords.insert(coords.end(), rs.dependent().begin(), rs.dependent().end());
  if (coords != pf.coordinates) {
    out.criterion = "chart and reduced system use different coordinates";
    return out;
  }
  for (const auto& c : pf.coefficients) {
    for (const auto& v : rs.jets_in(c)) {
      if (v.order() > 0) {
        out.criterion = "coefficient depends on derivatives of the reduced variables";
        out.witness = rs.jet_name(v);
        return out;
      }
    }
  }
  const int p = rs.p();
  VectorField Y(rs, std::vector<Expr>(pf.coefficients.begin(), pf.coefficients.begin() + p),
                std::vector<Expr>(pf.coefficients.begin() + p, pf.coefficients.end()));
  const SymmetryReport rep = check_point_symmetry(reduced.system, Y, config);
  if (!rep.symmetry) {
    out.criterion = "local coefficients, but not a point symmetry of the reduced system";
    out.witness = render(rep.residuals.front());
    return out;
  }
  out.verdict = Verdict::point;
  out.criterion = "local coefficients and a verified point symmetry of the reduced system";
  return out;
}

Classification lift_test(const VectorField& Y, const ReducedSystem& reduced, const SampleConfig& config) {
  const SymmetryReport rep = check_point_symmetry(reduced.system, Y, config);
  if (!rep.symmetry) throw PreconditionError("field is not a point symmetry of the reduced system");
  Classification out;
  out.coordinates = Y.coordinates();
  for (int i = 0; i < Y.dimension(); ++i) out.coefficients.push_back(Y.coefficient(i));
  const JetSpace& rs = reduced.system.space();
  const auto& aux = reduced.connection.aux;
  const int p = rs.p();
  if (rs.m() != p || reduced.parent.space().m() != 1) {
    out.criterion = "lift test covers a single eliminated dependent variable only";
    return out;
  }
  auto fail = [&](const std::string& criterion, const std::string& witness) {
    out.verdict = Verdict::nonlocal;
    out.criterion = criterion;
    out.witness = witness;
    return out;
  };
  const auto& x = rs.independent();
  std::vector<Expr> phi(p);
  for (int j = 0; j < p; ++j) phi[j] = Y.eta[rs.dependent_index(aux[j])];

  for (int k = 0; k < p; ++k) {
    for (const auto& a : aux) {
      if (depends_on(Y.xi[k], a)) return fail("base-component: xi depends on the reduced variables", a);
    }
  }
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < p; ++k) {
      for (int l = k; l < p; ++l) {
        const Expr d2 = diff(diff(phi[j], aux[k]), aux[l]);
        if (!equiv(d2, Expr(0), config)) {
          return fail("gradient-affinity: component is not affine in the reduced variables",
                      "d2 " + aux[j] + "/d" + aux[k] + " d" + aux[l] + " = " + render(d2));
        }
      }
    }
  }
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < p; ++k) {
      if (k == j) continue;
      const Expr c = diff(phi[j], aux[k]) + diff(Y.xi[k], x[j]);
      if (!equiv(c, Expr(0), config)) {
        return fail("gradient-affinity: cross terms do not come from xi", render(c));
      }
    }
  }
  Expr b0;
  for (int j = 0; j < p; ++j) {
    const Expr b = diff(phi[j], aux[j]) + diff(Y.xi[j], x[j]);
    for (const auto& v : free_vars(b)) {
      if (!rs.is_parameter(v)) return fail("gradient-affinity: u-scaling is not constant", render(b));
    }
    if (j == 0) {
      b0 = b;
    } else if (!equiv(b, b0, config)) {
      return fail("gradient-affinity: u-scaling differs between directions", render(b) + " vs " + render(b0));
    }
  }
  Bindings zero;
  for (const auto& a : aux) zero[a] = Expr(0);
  std::vector<Expr> a0(p);
  for (int j = 0; j < p; ++j) a0[j] = substitute(phi[j], zero);
  for (int j = 0; j < p; ++j) {
    for (int k = j + 1; k < p; ++k) {
      const Expr c = diff(a0[j], x[k]) - diff(a0[k], x[j]);
      if (!equiv(c, Expr(0), config)) return fail("gradient-affinity: alpha-free part is not a gradient", render(c));
    }
  }
  out.verdict = Verdict::point;
  out.criterion = "gradient-affinity: lifts with eta = ";
  if (!b0.is_zero()) out.criterion += render(b0 * Expr::symbol(reduced.connection.eliminated)) + " + ";
  out.criterion += "A(x)";
  return out;
}

}  // namespace liereduce
