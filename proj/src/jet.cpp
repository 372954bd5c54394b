#include "liereduce/jet.hpp"

#include <algorithm>

#include "liereduce/errors.hpp"

namespace liereduce {

JetSpace::JetSpace(std::vector<std::string> independent, std::vector<std::string> dependent,
                   int order, std::vector<std::string> parameters)
    : independent_(std::move(independent)),
      dependent_(std::move(dependent)),
      parameters_(std::move(parameters)),
      order_(order) {
  if (independent_.empty()) throw PreconditionError("at least one independent variable is required");
  if (dependent_.empty()) throw PreconditionError("at least one dependent variable is required");
  if (independent_.size() > 9) throw PreconditionError("at most nine independent variables");
  if (order_ < 0) throw PreconditionError("negative order");
  std::vector<std::string> all = independent_;
  all.insert(all.end(), dependent_.begin(), dependent_.end());
  all.insert(all.end(), parameters_.begin(), parameters_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PreconditionError("variable names must be unique");
  }
}

JetSpace JetSpace::with_order(int order) const {
  JetSpace s = *this;
  s.order_ = order;
  return s;
}

std::string JetSpace::jet_name(int dep, const MultiIndex& index) const {
  std::string name = dependent_.at(dep);
  if (index.empty()) return name;
  if (is_ode()) return name + std::string(index.size(), '\'');
  name += '_';
  for (int i : index) name += static_cast<char>('1' + i);
  return name;
}

int JetSpace::independent_index(const std::string& name) const {
  auto it = std::find(independent_.begin(), independent_.end(), name);
  return it == independent_.end() ? -1 : static_cast<int>(it - independent_.begin());
}

int JetSpace::dependent_index(const std::string& name) const {
  auto it = std::find(dependent_.begin(), dependent_.end(), name);
  return it == dependent_.end() ? -1 : static_cast<int>(it - dependent_.begin());
}

bool JetSpace::is_parameter(const std::string& name) const {
  return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
}

namespace {

// Reads the suffix after a dependent name; `strict` demands canonical form.
std::optional<MultiIndex> read_suffix(std::string_view rest, int p, bool ode, bool strict) {
  MultiIndex index;
  if (rest.empty()) return index;
  if (rest.find_first_not_of('\'') == std::string_view::npos) {
    if (!ode) return std::nullopt;
    return MultiIndex(rest.size(), 0);
  }
  if (rest[0] != '_' || rest.size() < 2) return std::nullopt;
  if (ode && strict) return std::nullopt;
  for (char c : rest.substr(1)) {
    if (c < '1' || c > '9') return std::nullopt;
    const int i = c - '1';
    if (i >= p) return std::nullopt;
    index.push_back(i);
  }
  if (strict && !std::is_sorted(index.begin(), index.end())) return std::nullopt;
  std::sort(index.begin(), index.end());
  return index;
}

std::optional<JetVar> read_jet(const JetSpace& s, std::string_view name, bool strict) {
  int best = -1;
  std::size_t best_len = 0;
  for (int d = 0; d < s.m(); ++d) {
    const std::string& dn = s.dependent()[d];
    if (name.substr(0, dn.size()) == dn && dn.size() > best_len) {
      auto idx = read_suffix(name.substr(dn.size()), s.p(), s.is_ode(), strict);
      if (idx) {
        best = d;
        best_len = dn.size();
      }
    }
  }
  if (best < 0) return std::nullopt;
  const std::string& dn = s.dependent()[best];
  return JetVar{best, *read_suffix(name.substr(dn.size()), s.p(), s.is_ode(), strict)};
}

}  // namespace

std::optional<JetVar> JetSpace::jet(const std::string& name) const {
  if (independent_index(name) >= 0 || is_parameter(name)) return std::nullopt;
  return read_jet(*this, name, true);
}

std::optional<std::string> JetSpace::resolve(std::string_view spelling) const {
  const std::string s(spelling);
  if (independent_index(s) >= 0 || is_parameter(s) || dependent_index(s) >= 0) return s;
  auto v = read_jet(*this, spelling, false);
  if (!v) return std::nullopt;
  return jet_name(*v);
}

Expr JetSpace::parse(std::string_view text) const {
  return parse_expr(text, [this](std::string_view n) { return resolve(n); });
}

std::vector<JetVar> JetSpace::jets(int lo, int hi) const {
  std::vector<JetVar> out;
  for (int d = 0; d < m(); ++d) {
    for (int k = lo; k <= hi; ++k) {
      // sorted multi-indices of length k over p symbols
      MultiIndex idx(k, 0);
      for (;;) {
        out.push_back(JetVar{d, idx});
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == p() - 1) --pos;
        if (pos < 0) break;
        const int v = idx[pos] + 1;
        for (int q = pos; q < k; ++q) idx[q] = v;
      }
    }
  }
  return out;
}

std::vector<JetVar> JetSpace::jets_in(const Expr& e) const {
  std::vector<JetVar> out;
  for (const auto& name : free_vars(e)) {
    if (auto v = jet(name)) out.push_back(*v);
  }
  return out;
}

int JetSpace::order_of(const Expr& e) const {
  int n = -1;
  for (const auto& v : jets_in(e)) n = std::max(n, v.order());
  return n;
}

MultiIndex with_index(MultiIndex index, int j) {
  index.insert(std::upper_bound(index.begin(), index.end(), j), j);
  return index;
}

Expr total_derivative(const JetSpace& space, const Expr& e, int j) {
  std::vector<Expr> terms{diff(e, space.independent().at(j))};
  for (const auto& v : space.jets_in(e)) {
    Expr d = diff(e, space.jet_name(v));
    if (d.is_zero()) continue;
    terms.push_back(mul({space.symbol(v.dep, with_index(v.index, j)), d}));
  }
  return add(std::move(terms));
}

Expr total_derivative(const JetSpace& space, const Expr& e, const MultiIndex& index) {
  Expr out = e;
  for (int j : index) out = total_derivative(space, out, j);
  return out;
}

VectorField::VectorField(JetSpace s, std::vector<Expr> xi_, std::vector<Expr> eta_)
    : space(std::move(s)), xi(std::move(xi_)), eta(std::move(eta_)) {
  if (static_cast<int>(xi.size()) != space.p() || static_cast<int>(eta.size()) != space.m()) {
    throw PreconditionError("vector field has the wrong number of components");
  }
  for (int i = 0; i < dimension(); ++i) {
    for (const auto& name : free_vars(coefficient(i))) {
      if (space.independent_index(name) >= 0 || space.dependent_index(name) >= 0 ||
          space.is_parameter(name)) {
        continue;
      }
      throw PreconditionError("coefficient depends on '" + name + "', which is not a base coordinate");
    }
  }
}

const Expr& VectorField::coefficient(int i) const {
  return i < static_cast<int>(xi.size()) ? xi[i] : eta[i - xi.size()];
}

std::vector<std::string> VectorField::coordinates() const {
  std::vector<std::string> c = space.independent();
  c.insert(c.end(), space.dependent().begin(), space.dependent().end());
  return c;
}

Expr VectorField::apply(const Expr& f) const {
  std::vector<Expr> terms;
  const auto coords = coordinates();
  for (int i = 0; i < dimension(); ++i) {
    if (coefficient(i).is_zero()) continue;
    Expr d = diff(f, coords[i]);
    if (!d.is_zero()) terms.push_back(mul({coefficient(i), d}));
  }
  return add(std::move(terms));
}

std::string VectorField::render() const {
  std::string out = "{";
  const auto coords = coordinates();
  for (int i = 0; i < dimension(); ++i) {
    if (i) out += "; ";
    out += coords[i] + ": " + liereduce::render(coefficient(i));
  }
  return out + "}";
}

VectorField scale(const VectorField& X, const Rational& c) {
  VectorField out = X;
  for (auto& e : out.xi) e = mul({Expr(c), e});
  for (auto& e : out.eta) e = mul({Expr(c), e});
  return out;
}

VectorField add(const VectorField& X, const VectorField& Y) {
  if (!(X.space == Y.space)) throw PreconditionError("fields live on different spaces");
  VectorField out = X;
  for (std::size_t i = 0; i < out.xi.size(); ++i) out.xi[i] = out.xi[i] + Y.xi[i];
  for (std::size_t i = 0; i < out.eta.size(); ++i) out.eta[i] = out.eta[i] + Y.eta[i];
  return out;
}

ProlongedField prolong(const VectorField& X, int order) {
  const JetSpace& s = X.space;
  ProlongedField P{X, order, {}};
  for (int d = 0; d < s.m(); ++d) P.eta[s.jet_name(d, {})] = X.eta[d];
  std::vector<std::vector<Expr>> dxi(s.p(), std::vector<Expr>(s.p()));
  for (int j = 0; j < s.p(); ++j) {
    for (int i = 0; i < s.p(); ++i) dxi[j][i] = total_derivative(s, X.xi[i], j);
  }
  for (const auto& v : s.jets(1, order)) {
    MultiIndex parent = v.index;
    const int j = parent.back();
    parent.pop_back();
    std::vector<Expr> terms{total_derivative(s, P.eta.at(s.jet_name(v.dep, parent)), j)};
    for (int i = 0; i < s.p(); ++i) {
      if (dxi[j][i].is_zero()) continue;
      terms.push_back(mul({Expr(-1), dxi[j][i], s.symbol(v.dep, with_index(parent, i))}));
    }
    P.eta[s.jet_name(v)] = add(std::move(terms));
  }
  return P;
}

Expr apply(const ProlongedField& P, const Expr& e) {
  const JetSpace& s = P.base.space;
  std::vector<Expr> terms;
  for (int j = 0; j < s.p(); ++j) {
    if (P.base.xi[j].is_zero()) continue;
    Expr d = diff(e, s.independent()[j]);
    if (!d.is_zero()) terms.push_back(mul({P.base.xi[j], d}));
  }
  for (const auto& v : s.jets_in(e)) {
    if (v.order() > P.order) {
      throw PreconditionError("expression has order " + std::to_string(v.order()) +
                              " but the prolongation stops at " + std::to_string(P.order));
    }
    const std::string name = s.jet_name(v);
    const Expr& c = P.eta.at(name);
    if (c.is_zero()) continue;
    Expr d = diff(e, name);
    if (!d.is_zero()) terms.push_back(mul({c, d}));
  }
  return add(std::move(terms));
}

}  // namespace liereduce
