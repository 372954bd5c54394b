#include "liereduce/reduction.hpp"

#include <algorithm>

#include "liereduce/errors.hpp"

namespace liereduce {

int ReducedSystem::integrability_count() const {
  int n = 0;
  for (const auto& eq : system.equations()) n += eq.role == Role::integrability;
  return n;
}

std::vector<std::string> default_aux_names(int p) {
  if (p == 1) return {"alpha"};
  if (p == 2) return {"alpha", "beta"};
  if (p == 3) return {"alpha", "beta", "gamma"};
  std::vector<std::string> out;
  for (int i = 1; i <= p; ++i) out.push_back("alpha" + std::to_string(i));
  return out;
}

namespace {

ReducedSystem build(const DESystem& sys, int target, std::vector<std::string> aux) {
  const JetSpace& s = sys.space();
  const int p = s.p();
  if (static_cast<int>(aux.size()) != p) throw PreconditionError("need one auxiliary name per independent variable");
  const std::string& u = s.dependent()[target];
  for (const auto& eq : sys.equations()) {
    if (depends_on(eq.expr, u)) {
      throw PreconditionError("'" + u + "' occurs undifferentiated; transform to canonical coordinates first");
    }
  }
  std::vector<std::string> dep = aux;
  for (int d = 0; d < s.m(); ++d) {
    if (d != target) dep.push_back(s.dependent()[d]);
  }
  ReducedSystem r;
  r.parent = sys;
  const JetSpace reduced(s.independent(), dep, std::max(0, sys.order() - 1), s.parameters());

  auto map_jet = [&](const JetVar& v) -> Expr {
    if (v.dep == target) {
      MultiIndex rest(v.index.begin() + 1, v.index.end());
      return reduced.symbol(v.index.front(), rest);
    }
    const int d = reduced.dependent_index(s.dependent()[v.dep]);
    return reduced.symbol(d, v.index);
  };

  std::vector<Expr> eqs;
  std::vector<Role> roles;
  for (const auto& eq : sys.equations()) {
    Bindings b;
    for (const auto& v : s.jets_in(eq.expr)) b[s.jet_name(v)] = map_jet(v);
    eqs.push_back(substitute(eq.expr, b));
    roles.push_back(Role::reduced);
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      eqs.push_back(reduced.symbol(i, {j}) - reduced.symbol(j, {i}));
      roles.push_back(Role::integrability);
    }
  }
  r.system = DESystem(reduced, eqs, roles);
  r.connection.eliminated = u;
  r.connection.aux = aux;
  for (int i = 0; i < p; ++i) r.connection.definitions.push_back(s.symbol(target, {i}));
  return r;
}

int target_index(const DESystem& sys, const std::string& target) {
  if (target.empty()) {
    if (sys.space().m() != 1) throw PreconditionError("name the dependent variable to eliminate");
    return 0;
  }
  const int d = sys.space().dependent_index(target);
  if (d < 0) throw PreconditionError("unknown dependent variable '" + target + "'");
  return d;
}

}  // namespace

ReducedSystem reduce_ode(const DESystem& sys, const std::string& aux, const std::string& target) {
  if (!sys.space().is_ode()) throw PreconditionError("reduce_ode needs one independent variable");
  if (sys.order() < 1) throw PreconditionError("nothing to reduce in an order-zero system");
  return build(sys, target_index(sys, target), {aux});
}

ReducedSystem reduce_pde(const DESystem& sys, const std::string& target, std::vector<std::string> aux) {
  if (sys.space().p() < 2) throw PreconditionError("reduce_pde needs at least two independent variables");
  if (aux.empty()) aux = default_aux_names(sys.space().p());
  return build(sys, target_index(sys, target), std::move(aux));
}

ReducedSystem reduce(const DESystem& sys, const std::string& target, std::vector<std::string> aux) {
  if (sys.space().is_ode()) return reduce_ode(sys, aux.empty() ? "alpha" : aux[0], target);
  return reduce_pde(sys, target, std::move(aux));
}

Expr reduced_jet(const ReducedSystem& r, const JetVar& v) {
  MultiIndex rest(v.index.begin() + 1, v.index.end());
  return r.system.space().symbol(v.index.front(), rest);
}

ConnectionCheck verify_connection(const ReducedSystem& r, const std::optional<Candidate>& parent_solution,
                                  const std::optional<Candidate>& reduced_solution,
                                  const std::optional<Expr>& antiderivative,
                                  const std::vector<Rational>& constants, const SampleConfig& config) {
  if (!parent_solution && !reduced_solution) {
    throw PreconditionError("supply a parent or a reduced solution");
  }
  ConnectionCheck out;
  auto note = [&](bool ok, const std::string& what) {
    out.notes.push_back(what + (ok ? ": ok" : ": FAILED"));
    out.ok = out.ok && ok;
  };
  const JetSpace& ps = r.parent.space();
  const std::string& u = r.connection.eliminated;
  const auto& aux = r.connection.aux;

  auto gradient = [&](const Expr& U) {
    Candidate g;
    for (int i = 0; i < ps.p(); ++i) g[aux[i]] = diff(U, ps.independent()[i]);
    return g;
  };

  if (parent_solution) {
    note(verify_solution(r.parent, *parent_solution, config), "parent solution solves the parent");
    Candidate g = gradient(parent_solution->at(u));
    for (const auto& [name, e] : *parent_solution) {
      if (name != u) g[name] = e;
    }
    note(verify_solution(r.system, g, config), "its gradient solves the reduced system");
    if (reduced_solution) {
      bool same = true;
      for (const auto& a : aux) same = same && equiv(g.at(a), reduced_solution->at(a), config);
      note(same, "gradient matches the stated reduced solution");
    }
    return out;
  }

  note(verify_solution(r.system, *reduced_solution, config), "reduced solution solves the reduced system");
  if (antiderivative) {
    const Candidate g = gradient(*antiderivative);
    bool same = true;
    for (const auto& a : aux) same = same && equiv(g.at(a), reduced_solution->at(a), config);
    note(same, "gradient of the antiderivative matches");
    for (const auto& c : constants) {
      Candidate lifted;
      for (const auto& [name, e] : *reduced_solution) {
        if (r.system.space().dependent_index(name) >= 0 &&
            std::find(aux.begin(), aux.end(), name) == aux.end()) {
          lifted[name] = e;
        }
      }
      lifted[u] = *antiderivative + Expr(c);
      note(verify_solution(r.parent, lifted, config), "U + " + c.get_str() + " solves the parent");
    }
    return out;
  }

  // Formal quadrature: the parent involves u only through its derivatives.
  bool all_ok = true;
  for (const auto& eq : r.parent.equations()) {
    Bindings b;
    for (const auto& v : ps.jets_in(eq.expr)) {
      if (ps.dependent()[v.dep] == u) {
        const std::string& a = aux[v.index.front()];
        Expr d = reduced_solution->at(a);
        for (std::size_t k = 1; k < v.index.size(); ++k) d = diff(d, ps.independent()[v.index[k]]);
        b[ps.jet_name(v)] = d;
      } else {
        Expr d = reduced_solution->at(ps.dependent()[v.dep]);
        for (int j : v.index) d = diff(d, ps.independent()[j]);
        b[ps.jet_name(v)] = d;
      }
    }
    all_ok = all_ok && equiv(substitute(eq.expr, b), Expr(0), config);
  }
  note(all_ok, "parent holds with its jets replaced by derivatives of the reduced solution");
  return out;
}

}  // namespace liereduce
