#include "liereduce/desystem.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "liereduce/errors.hpp"
#include "liereduce/linsolve.hpp"

namespace liereduce {

const char* role_name(Role r) {
  switch (r) {
    case Role::equation:
      return "equation";
    case Role::reduced:
      return "reduced-equation";
    case Role::integrability:
      return "integrability";
  }
  return "equation";
}

namespace {

bool jet_less(const JetVar& a, const JetVar& b) {
  if (a.order() != b.order()) return a.order() > b.order();
  if (a.dep != b.dep) return a.dep < b.dep;
  return a.index < b.index;
}

bool same_jet(const JetVar& a, const JetVar& b) { return a.dep == b.dep && a.index == b.index; }

// Multiset difference big - small, or nothing when small is not contained.
std::optional<MultiIndex> index_rest(const MultiIndex& big, const MultiIndex& small) {
  MultiIndex rest;
  std::size_t i = 0;
  for (int v : big) {
    if (i < small.size() && small[i] == v) {
      ++i;
    } else {
      rest.push_back(v);
    }
  }
  if (i != small.size()) return std::nullopt;
  return rest;
}

bool is_affine_in(const Expr& e, const std::string& name) {
  const Expr c = diff(e, name);
  return !c.is_zero() && !depends_on(c, name);
}

}  // namespace

DESystem::DESystem(JetSpace space, std::vector<Expr> equations, std::vector<Role> roles)
    : space_(std::move(space)) {
  if (equations.empty()) throw PreconditionError("a system needs at least one equation");
  std::vector<JetVar> chosen;
  for (std::size_t k = 0; k < equations.size(); ++k) {
    const Expr& e = equations[k];
    auto jets = space_.jets_in(e);
    std::sort(jets.begin(), jets.end(), jet_less);
    if (jets.empty()) {
      throw PreconditionError("equation " + std::to_string(k + 1) + " has no dependent variable");
    }
    const int top = jets.front().order();
    std::optional<JetVar> fresh, any;
    for (const auto& v : jets) {
      if (v.order() != top) break;
      if (!is_affine_in(e, space_.jet_name(v))) continue;
      const bool taken = std::any_of(chosen.begin(), chosen.end(),
                                     [&](const JetVar& c) { return same_jet(c, v); });
      if (taken) continue;
      const bool dep_used = std::any_of(chosen.begin(), chosen.end(),
                                        [&](const JetVar& c) { return c.dep == v.dep; });
      if (!dep_used && !fresh) fresh = v;
      if (!any) any = v;
    }
    const auto leader = fresh ? fresh : any;
    if (!leader) {
      throw PreconditionError("equation " + std::to_string(k + 1) +
                              " is not affine in any highest-order jet variable; supply a solved form");
    }
    chosen.push_back(*leader);
    const std::string name = space_.jet_name(*leader);
    const Expr c = diff(e, name);
    const Expr e0 = substitute(e, {{name, Expr(0)}});
    Equation eq{e, *leader, mul({Expr(-1), e0, pow(c, Rational(-1))}),
                k < roles.size() ? roles[k] : Role::equation};
    equations_.push_back(std::move(eq));
  }

  // Joint solve when a solved form mentions another leader.
  bool coupled = false;
  for (const auto& eq : equations_) {
    for (const auto& l : chosen) {
      if (!same_jet(l, eq.leader) && depends_on(eq.rhs, space_.jet_name(l))) coupled = true;
    }
  }
  if (!coupled) return;
  const std::size_t n = equations_.size();
  Matrix a(n, std::vector<Expr>(n));
  std::vector<Expr> b(n);
  Bindings zero;
  for (const auto& l : chosen) zero[space_.jet_name(l)] = Expr(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = diff(equations_[i].expr, space_.jet_name(chosen[j]));
      for (const auto& l : chosen) {
        if (depends_on(a[i][j], space_.jet_name(l))) {
          throw PreconditionError("equations are not jointly affine in their leaders");
        }
      }
    }
    b[i] = -substitute(equations_[i].expr, zero);
  }
  const auto x = solve_linear(a, b);
  for (std::size_t i = 0; i < n; ++i) equations_[i].rhs = x[i];
}

std::vector<Expr> DESystem::exprs() const {
  std::vector<Expr> out;
  for (const auto& e : equations_) out.push_back(e.expr);
  return out;
}

int DESystem::order() const {
  int n = 0;
  for (const auto& e : equations_) n = std::max(n, space_.order_of(e.expr));
  return n;
}

Expr DESystem::on_manifold(const Expr& e, int max_passes) const {
  std::map<std::string, Expr> cache;
  auto replacement = [&](const JetVar& v) -> std::optional<Expr> {
    const std::string name = space_.jet_name(v);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    for (const auto& eq : equations_) {
      if (eq.leader.dep != v.dep) continue;
      auto rest = index_rest(v.index, eq.leader.index);
      if (!rest) continue;
      Expr r = total_derivative(space_, eq.rhs, *rest);
      cache.emplace(name, r);
      return r;
    }
    return std::nullopt;
  };
  Expr cur = e;
  for (int pass = 0; pass < max_passes; ++pass) {
    Bindings b;
    for (const auto& v : space_.jets_in(cur)) {
      if (auto r = replacement(v)) b[space_.jet_name(v)] = *r;
    }
    if (b.empty()) break;
    cur = substitute(cur, b);
  }
  return cur;
}

std::string DESystem::render() const {
  std::string out;
  for (const auto& e : equations_) {
    if (!out.empty()) out += "; ";
    out += liereduce::render(e.expr) + " = 0";
  }
  return out;
}

SymmetryReport check_point_symmetry(const DESystem& sys, const VectorField& X,
                                    const SampleConfig& config) {
  if (!(X.space.independent() == sys.space().independent()) ||
      !(X.space.dependent() == sys.space().dependent())) {
    throw PreconditionError("field and system use different base coordinates");
  }
  const ProlongedField P = prolong(X, std::max(1, sys.order()));
  SymmetryReport report;
  report.symmetry = true;
  for (const auto& eq : sys.equations()) {
    const Expr r = sys.on_manifold(apply(P, eq.expr));
    if (!equiv(tidy_equation(r), Expr(0), config)) report.symmetry = false;
    report.residuals.push_back(r);
  }
  return report;
}

std::vector<Expr> solution_residuals(const DESystem& sys, const Candidate& candidate) {
  const JetSpace& s = sys.space();
  std::vector<Expr> out;
  for (const auto& eq : sys.equations()) {
    Bindings b;
    for (const auto& v : s.jets_in(eq.expr)) {
      auto it = candidate.find(s.dependent()[v.dep]);
      if (it == candidate.end()) {
        throw PreconditionError("no candidate for '" + s.dependent()[v.dep] + "'");
      }
      Expr d = it->second;
      for (int j : v.index) d = diff(d, s.independent()[j]);
      b[s.jet_name(v)] = d;
    }
    out.push_back(substitute(eq.expr, b));
  }
  return out;
}

bool verify_solution(const DESystem& sys, const Candidate& candidate, const SampleConfig& config) {
  for (const auto& [dep, e] : candidate) {
    for (const auto& name : free_vars(e)) {
      if (sys.space().independent_index(name) < 0 && !sys.space().is_parameter(name)) {
        throw PreconditionError("candidate for '" + dep + "' depends on '" + name + "'");
      }
    }
  }
  for (const auto& r : solution_residuals(sys, candidate)) {
    if (!equiv(r, Expr(0), config)) return false;
  }
  return true;
}

namespace {

std::optional<Expr> exp_argument(const Expr& term) {
  const Expr m = split_coefficient(term).second;
  const auto& factors = m.is_product() ? m.args() : std::vector<Expr>{m};
  for (const auto& f : factors) {
    if (f.is_call() && f.name() == "exp") return f.args()[0];
  }
  return std::nullopt;
}

// Divides by the exp factor of one term, choosing the smallest result.
Expr strip_exp(const Expr& e) {
  Expr best = e;
  std::set<Expr, ExprLess> tried;
  for (const auto& t : e.args()) {
    auto arg = exp_argument(t);
    if (!arg || !tried.insert(*arg).second) continue;
    Expr candidate = mul({e, exp(-*arg)});
    if (candidate.size() < best.size()) best = candidate;
  }
  return best;
}

}  // namespace

Expr tidy_equation(const Expr& e) {
  Expr cur = clear_denominators(e);
  if (!cur.is_sum()) return cur;
  cur = atom_content(strip_exp(cur)).second;
  if (!cur.is_sum()) return cur;
  mpz_class den = 1, num = 0;
  for (const auto& t : cur.args()) {
    const Rational c = split_coefficient(t).first;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational f(den, num);
  f.canonicalize();
  if (split_coefficient(cur.args()[0]).first < 0) f = -f;
  if (f == 1) return cur;
  return mul({Expr(f), cur});
}

}  // namespace liereduce
