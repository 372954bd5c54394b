#include "liereduce/transform.hpp"

#include <algorithm>

#include "liereduce/errors.hpp"
#include "liereduce/linsolve.hpp"

namespace liereduce {

namespace {

std::vector<std::string> base_coordinates(const JetSpace& s) {
  std::vector<std::string> c = s.independent();
  c.insert(c.end(), s.dependent().begin(), s.dependent().end());
  return c;
}

Bindings base_bindings(const JetSpace& from, const std::vector<Expr>& values) {
  Bindings b;
  const auto names = base_coordinates(from);
  for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = values[i];
  return b;
}

std::vector<std::string> default_names(const std::string& stem, int count, bool plain_single) {
  if (count == 1 && plain_single) return {stem};
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

PointTransformation make_transformation(const JetSpace& source, std::vector<std::string> target_independent,
                                        std::vector<std::string> target_dependent,
                                        std::vector<Expr> forward, std::vector<Expr> inverse,
                                        int canonical) {
  const std::size_t n = static_cast<std::size_t>(source.p() + source.m());
  if (static_cast<int>(target_independent.size()) != source.p() ||
      static_cast<int>(target_dependent.size()) != source.m()) {
    throw PreconditionError("chart must keep the numbers of independent and dependent variables");
  }
  if (forward.size() != n) throw PreconditionError("chart needs one expression per target coordinate");
  if (!inverse.empty() && inverse.size() != n) {
    throw PreconditionError("inverse needs one expression per source coordinate");
  }
  if (canonical < 0 || canonical >= source.m()) throw PreconditionError("bad canonical index");
  PointTransformation T;
  T.source = source;
  T.target = JetSpace(std::move(target_independent), std::move(target_dependent), source.order(),
                      source.parameters());
  T.forward = std::move(forward);
  T.inverse = std::move(inverse);
  T.canonical = canonical;
  const auto src = base_coordinates(T.source);
  const auto dst = base_coordinates(T.target);
  for (const auto& e : T.forward) {
    for (const auto& v : free_vars(e)) {
      if (std::find(src.begin(), src.end(), v) == src.end() && !T.source.is_parameter(v)) {
        throw PreconditionError("chart expression uses '" + v + "', not a source coordinate");
      }
    }
  }
  for (const auto& e : T.inverse) {
    for (const auto& v : free_vars(e)) {
      if (std::find(dst.begin(), dst.end(), v) == dst.end() && !T.target.is_parameter(v)) {
        throw PreconditionError("inverse expression uses '" + v + "', not a target coordinate");
      }
    }
  }
  return T;
}

Expr jacobian_determinant(const PointTransformation& T) {
  const auto src = base_coordinates(T.source);
  Matrix J(src.size(), std::vector<Expr>(src.size()));
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = 0; b < src.size(); ++b) J[a][b] = diff(T.forward[a], src[b]);
  }
  return determinant(J);
}

void validate(const PointTransformation& T, const SampleConfig& config) {
  if (!sampled_nonzero(jacobian_determinant(T), config)) {
    throw PreconditionError("chart Jacobian vanishes");
  }
  if (!T.has_inverse()) return;
  const auto src = base_coordinates(T.source);
  const auto dst = base_coordinates(T.target);
  const Bindings to_target = base_bindings(T.source, T.inverse);
  const Bindings to_source = base_bindings(T.target, T.forward);
  for (std::size_t a = 0; a < dst.size(); ++a) {
    if (!equiv(substitute(T.forward[a], to_target), Expr::symbol(dst[a]), config)) {
      throw PreconditionError("inverse does not undo the chart for '" + dst[a] + "'");
    }
  }
  for (std::size_t a = 0; a < src.size(); ++a) {
    if (!equiv(substitute(T.inverse[a], to_source), Expr::symbol(src[a]), config)) {
      throw PreconditionError("chart does not undo the inverse for '" + src[a] + "'");
    }
  }
}

bool verify_canonical(const VectorField& X, const PointTransformation& T, const SampleConfig& config) {
  const int p = T.target.p();
  for (int a = 0; a < static_cast<int>(T.forward.size()); ++a) {
    const Expr want = a == p + T.canonical ? Expr(1) : Expr(0);
    if (!equiv(X.apply(T.forward[a]), want, config)) return false;
  }
  return true;
}

std::optional<PointTransformation> catalog_chart(const VectorField& X,
                                                 std::vector<std::string> target_independent,
                                                 std::vector<std::string> target_dependent) {
  const JetSpace& S = X.space;
  const int p = S.p(), m = S.m(), n = p + m;
  if (target_independent.empty()) target_independent = default_names("r", p, true);
  if (target_dependent.empty()) target_dependent = default_names("s", m, true);
  const auto z = base_coordinates(S);
  std::vector<Expr> zs;
  for (const auto& name : z) zs.push_back(Expr::symbol(name));

  // Assembles a chart whose canonical coordinate comes from slot k; the other
  // slots keep their order, independents first.
  auto assemble = [&](int k, const Expr& s_fwd, const std::vector<Expr>& others_fwd,
                      const std::vector<Expr>& inverse_in_slots) {
    std::vector<Expr> forward;
    std::vector<int> slot_of_target;
    for (int a = 0; a < n; ++a) {
      if (a == k) continue;
      slot_of_target.push_back(a);
    }
    // target order: first p non-canonical slots -> r, then s, then the rest
    std::vector<Expr> fwd(n);
    std::vector<std::string> tnames = target_independent;
    tnames.insert(tnames.end(), target_dependent.begin(), target_dependent.end());
    for (int i = 0; i < p; ++i) fwd[i] = others_fwd[slot_of_target[i]];
    fwd[p] = s_fwd;
    for (int i = p; i < n - 1; ++i) fwd[i + 1] = others_fwd[slot_of_target[i]];
    // inverse_in_slots is written with placeholders "#a" for target slot a
    Bindings rename;
    for (int i = 0; i < p; ++i) rename["#" + std::to_string(slot_of_target[i])] = Expr::symbol(tnames[i]);
    rename["#s"] = Expr::symbol(tnames[p]);
    for (int i = p; i < n - 1; ++i) {
      rename["#" + std::to_string(slot_of_target[i])] = Expr::symbol(tnames[i + 1]);
    }
    std::vector<Expr> inv;
    for (const auto& e : inverse_in_slots) inv.push_back(substitute(e, rename));
    return make_transformation(S, target_independent, target_dependent, fwd, inv, 0);
  };
  auto slot = [](int a) { return Expr::symbol("#" + std::to_string(a)); };
  const Expr s_slot = Expr::symbol("#s");

  std::vector<Expr> coeff;
  for (int a = 0; a < n; ++a) coeff.push_back(X.coefficient(a));

  // translations
  if (std::all_of(coeff.begin(), coeff.end(), [](const Expr& c) { return c.is_number(); })) {
    int k = -1;
    for (int a = p; a < n && k < 0; ++a) {
      if (!coeff[a].is_zero()) k = a;
    }
    for (int a = 0; a < p && k < 0; ++a) {
      if (!coeff[a].is_zero()) k = a;
    }
    if (k < 0) return std::nullopt;
    const Rational ck = coeff[k].value();
    std::vector<Expr> others(n), inverse(n);
    for (int a = 0; a < n; ++a) {
      if (a == k) continue;
      const Rational ratio = coeff[a].value() / ck;
      others[a] = zs[a] - mul({Expr(ratio), zs[k]});
      inverse[a] = slot(a) + mul({Expr(coeff[a].value()), s_slot});
    }
    inverse[k] = mul({Expr(ck), s_slot});
    return assemble(k, mul({Expr(Rational(1) / ck), zs[k]}), others, inverse);
  }

  // diagonal scalings a_i z_i d/dz_i
  std::vector<Rational> weight(n);
  bool scaling = true;
  for (int a = 0; a < n && scaling; ++a) {
    const Expr ratio = coeff[a] / zs[a];
    if (ratio.is_number()) {
      weight[a] = ratio.value();
    } else {
      scaling = false;
    }
  }
  if (scaling) {
    int k = -1;
    for (int a = 0; a < p && k < 0; ++a) {
      if (weight[a] != 0) k = a;
    }
    for (int a = p; a < n && k < 0; ++a) {
      if (weight[a] != 0) k = a;
    }
    if (k < 0) return std::nullopt;
    const Rational ak = weight[k];
    std::vector<Expr> others(n), inverse(n);
    for (int a = 0; a < n; ++a) {
      if (a == k) continue;
      others[a] = mul({zs[a], pow(zs[k], -weight[a] / ak)});
      inverse[a] = mul({slot(a), exp(mul({Expr(weight[a]), s_slot}))});
    }
    inverse[k] = exp(mul({Expr(ak), s_slot}));
    return assemble(k, mul({Expr(Rational(1) / ak), log(zs[k])}), others, inverse);
  }

  // fiber fields f(x) u d/du with one dependent variable
  if (m == 1) {
    bool fiber = true;
    for (int a = 0; a < p; ++a) fiber = fiber && coeff[a].is_zero();
    const Expr f = coeff[p] / zs[p];
    if (fiber && !depends_on(f, z[p]) && !f.is_zero()) {
      std::vector<Expr> others(n), inverse(n);
      Bindings to_slots;
      for (int a = 0; a < p; ++a) {
        others[a] = zs[a];
        inverse[a] = slot(a);
        to_slots[z[a]] = slot(a);
      }
      inverse[p] = exp(mul({substitute(f, to_slots), s_slot}));
      return assemble(p, mul({log(zs[p]), pow(f, Rational(-1))}), others, inverse);
    }
  }
  return std::nullopt;
}

SourceJets::SourceJets(const PointTransformation& T) : T_(T) {
  if (!T.has_inverse()) throw PreconditionError("chart has no inverse");
  const JetSpace& t = T.target;
  const int p = t.p();
  Matrix M(p, std::vector<Expr>(p));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) M[i][j] = total_derivative(t, T.inverse[j], i);
  }
  // u_j = sum_i (M^-1)_{ji} Dhat_i U
  minv_ = inverse_matrix(M);
}

Expr SourceJets::jet(const JetVar& v) {
  const JetSpace& s = T_.source;
  const std::string name = s.jet_name(v);
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  Expr out;
  if (v.index.empty()) {
    out = T_.inverse[s.p() + v.dep];
  } else {
    JetVar parent = v;
    const int j = parent.index.back();
    parent.index.pop_back();
    const Expr base = jet(parent);
    std::vector<Expr> terms;
    for (int i = 0; i < s.p(); ++i) {
      if (minv_[j][i].is_zero()) continue;
      terms.push_back(mul({minv_[j][i], total_derivative(T_.target, base, i)}));
    }
    out = add(std::move(terms));
  }
  cache_.emplace(name, out);
  return out;
}

Bindings SourceJets::bindings_for(const Expr& e) {
  const JetSpace& s = T_.source;
  Bindings b;
  for (const auto& name : free_vars(e)) {
    const int j = s.independent_index(name);
    if (j >= 0) {
      b[name] = T_.inverse[j];
    } else if (auto v = s.jet(name)) {
      b[name] = jet(*v);
    }
  }
  return b;
}

TargetJets::TargetJets(const PointTransformation& T) : T_(T) {
  const JetSpace& s = T.source;
  const int p = s.p();
  Matrix A(p, std::vector<Expr>(p));
  for (int j = 0; j < p; ++j) {
    for (int i = 0; i < p; ++i) A[j][i] = total_derivative(s, T.forward[i], j);
  }
  // sum_i s_i A[j][i] = D_j S, so s_i = sum_j (A^-1)_{ij} D_j S
  ainv_ = inverse_matrix(A);
}

Expr TargetJets::jet(const JetVar& v) {
  const JetSpace& t = T_.target;
  const std::string name = t.jet_name(v);
  if (auto it = cache_.find(name); it != cache_.end()) return it->second;
  Expr out;
  if (v.index.empty()) {
    out = T_.forward[t.p() + v.dep];
  } else {
    JetVar parent = v;
    const int i = parent.index.back();
    parent.index.pop_back();
    const Expr base = jet(parent);
    std::vector<Expr> terms;
    for (int j = 0; j < t.p(); ++j) {
      if (ainv_[i][j].is_zero()) continue;
      terms.push_back(mul({ainv_[i][j], total_derivative(T_.source, base, j)}));
    }
    out = add(std::move(terms));
  }
  cache_.emplace(name, out);
  return out;
}

Expr transform_expr(const Expr& e, const PointTransformation& T) {
  SourceJets sj(T);
  return substitute(e, sj.bindings_for(e));
}

DESystem transform_de(const DESystem& sys, const PointTransformation& T) {
  if (!(sys.space().independent() == T.source.independent()) ||
      !(sys.space().dependent() == T.source.dependent())) {
    throw PreconditionError("system and chart use different coordinates");
  }
  const int cap = sys.space().is_ode() ? 3 : 2;
  if (sys.order() > cap) {
    throw PreconditionError("order " + std::to_string(sys.order()) + " exceeds the transform cap of " +
                            std::to_string(cap));
  }
  SourceJets sj(T);
  std::vector<Expr> out;
  std::vector<Role> roles;
  for (const auto& eq : sys.equations()) {
    out.push_back(tidy_equation(substitute(eq.expr, sj.bindings_for(eq.expr))));
    roles.push_back(eq.role);
  }
  return DESystem(T.target.with_order(sys.order()), out, roles);
}

bool same_system(const DESystem& a, const DESystem& b, const SampleConfig& config) {
  for (const auto& eq : b.equations()) {
    if (!equiv(tidy_equation(a.on_manifold(eq.expr)), Expr(0), config)) return false;
  }
  for (const auto& eq : a.equations()) {
    if (!equiv(tidy_equation(b.on_manifold(eq.expr)), Expr(0), config)) return false;
  }
  return true;
}

Expr aux_source(const PointTransformation& T, const AuxDef& aux) {
  TargetJets tj(T);
  return tj.jet(aux.target_jet);
}

Pushforward pushforward_field(const VectorField& X, const PointTransformation& T,
                              const std::vector<AuxDef>& aux) {
  const JetSpace& t = T.target;
  const int p = t.p();
  int order = 1;
  for (const auto& a : aux) order = std::max(order, a.target_jet.order());
  const ProlongedField P = prolong(X, order);

  // reduced coordinates: aux names, then the untouched target dependents;
  // without aux the canonical coordinate stays
  const int dropped = aux.empty() ? -1 : T.canonical;
  std::vector<std::string> reduced_dep;
  for (const auto& a : aux) reduced_dep.push_back(a.name);
  for (int d = 0; d < t.m(); ++d) {
    if (d != dropped) reduced_dep.push_back(t.dependent()[d]);
  }
  const JetSpace reduced(t.independent(), reduced_dep, std::max(0, t.order() - 1), t.parameters());

  Pushforward out;
  std::vector<Expr> raw;
  for (int i = 0; i < p; ++i) {
    out.coordinates.push_back(t.independent()[i]);
    raw.push_back(X.apply(T.forward[i]));
  }
  TargetJets tj(T);
  for (const auto& a : aux) {
    out.coordinates.push_back(a.name);
    raw.push_back(apply(P, tj.jet(a.target_jet)));
  }
  for (int d = 0; d < t.m(); ++d) {
    if (d == dropped) continue;
    out.coordinates.push_back(t.dependent()[d]);
    raw.push_back(X.apply(T.forward[p + d]));
  }

  if (!T.has_inverse()) {
    out.coefficients = raw;
    out.raw = true;
    for (const auto& c : raw) {
      auto fv = free_vars(c);
      out.leftover.insert(fv.begin(), fv.end());
    }
    return out;
  }

  // canonical jets -> aux jets
  auto aux_binding = [&](const JetVar& v) -> std::optional<Expr> {
    if (v.dep != T.canonical || v.index.empty()) return std::nullopt;
    for (std::size_t k = 0; k < aux.size(); ++k) {
      const auto& a = aux[k];
      if (a.target_jet.dep != v.dep) continue;
      MultiIndex rest;
      std::size_t i = 0;
      for (int x : v.index) {
        if (i < a.target_jet.index.size() && a.target_jet.index[i] == x) {
          ++i;
        } else {
          rest.push_back(x);
        }
      }
      if (i == a.target_jet.index.size()) return reduced.symbol(static_cast<int>(k), rest);
    }
    return std::nullopt;
  };

  SourceJets sj(T);
  for (const auto& c : raw) {
    Expr e = substitute(c, sj.bindings_for(c));
    Bindings b;
    for (const auto& v : t.jets_in(e)) {
      if (auto r = aux_binding(v)) b[t.jet_name(v)] = *r;
    }
    e = substitute(e, b);
    out.coefficients.push_back(e);
    for (const auto& name : free_vars(e)) {
      if (t.independent_index(name) >= 0 || t.is_parameter(name) || name == T.canonical_name()) continue;
      if (reduced.jet(name)) continue;
      out.leftover.insert(name);
    }
  }
  out.raw = !out.leftover.empty();
  return out;
}

}  // namespace liereduce
