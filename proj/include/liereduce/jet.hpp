#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liereduce/calculus.hpp"
#include "liereduce/parse.hpp"

namespace liereduce {

/// Sorted, 0-based indices of the independent variables differentiated by.
using MultiIndex = std::vector<int>;

struct JetVar {
  int dep = 0;
  MultiIndex index;
  int order() const { return static_cast<int>(index.size()); }
};

/// Independent variables x_1..x_p, dependent variables u^1..u^m and their
/// derivatives. Jet names: y, y', y'' for one independent variable; u, u_1,
/// u_12 otherwise (indices 1-based, written sorted; u_21 is read as u_12).
/// Derivatives of any order can be named, so the declared order only bounds
/// what prolongation builds by default.
class JetSpace {
 public:
  JetSpace() = default;
  JetSpace(std::vector<std::string> independent, std::vector<std::string> dependent, int order,
           std::vector<std::string> parameters = {});

  int p() const { return static_cast<int>(independent_.size()); }
  int m() const { return static_cast<int>(dependent_.size()); }
  int order() const { return order_; }
  bool is_ode() const { return p() == 1; }

  const std::vector<std::string>& independent() const { return independent_; }
  const std::vector<std::string>& dependent() const { return dependent_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  JetSpace with_order(int order) const;

  std::string jet_name(int dep, const MultiIndex& index) const;
  std::string jet_name(const JetVar& v) const { return jet_name(v.dep, v.index); }

  /// Jet variable behind a canonical name (order 0 included).
  std::optional<JetVar> jet(const std::string& name) const;
  /// Index of an independent variable, or -1.
  int independent_index(const std::string& name) const;
  int dependent_index(const std::string& name) const;
  bool is_parameter(const std::string& name) const;

  /// Canonical name for a spelling (aliases such as u_21 or y_11 resolve).
  std::optional<std::string> resolve(std::string_view spelling) const;
  Expr parse(std::string_view text) const;

  /// All jet variables with order between lo and hi, dependent-major.
  std::vector<JetVar> jets(int lo, int hi) const;
  /// Jet variables occurring in e.
  std::vector<JetVar> jets_in(const Expr& e) const;
  /// Highest jet order in e; -1 when no dependent variable occurs.
  int order_of(const Expr& e) const;

  Expr symbol(int dep, const MultiIndex& index) const { return Expr::symbol(jet_name(dep, index)); }
  Expr x(int j) const { return Expr::symbol(independent_[j]); }

  bool operator==(const JetSpace& other) const = default;

 private:
  std::vector<std::string> independent_;
  std::vector<std::string> dependent_;
  std::vector<std::string> parameters_;
  int order_ = 1;
};

MultiIndex with_index(MultiIndex index, int j);

/// D_j e.
Expr total_derivative(const JetSpace& space, const Expr& e, int j);
/// Repeated total derivative along a multi-index.
Expr total_derivative(const JetSpace& space, const Expr& e, const MultiIndex& index);

/// Point generator: xi_j for each independent variable, eta^mu for each
/// dependent variable. Coefficients may only involve base coordinates and
/// parameters.
struct VectorField {
  JetSpace space;
  std::vector<Expr> xi;
  std::vector<Expr> eta;

  VectorField() = default;
  VectorField(JetSpace s, std::vector<Expr> xi_, std::vector<Expr> eta_);

  /// Coefficient of the i-th base coordinate (independent first).
  const Expr& coefficient(int i) const;
  int dimension() const { return static_cast<int>(xi.size() + eta.size()); }
  std::vector<std::string> coordinates() const;
  /// Action as a derivation on base-coordinate expressions.
  Expr apply(const Expr& f) const;
  std::string render() const;
};

VectorField scale(const VectorField& X, const Rational& c);
VectorField add(const VectorField& X, const VectorField& Y);

struct ProlongedField {
  VectorField base;
  int order = 0;
  /// Coefficient for every jet variable name up to `order`, order 0 included.
  std::map<std::string, Expr> eta;
};

ProlongedField prolong(const VectorField& X, int order);

/// X^(n) e. Throws PreconditionError when e has a jet beyond the prolongation.
Expr apply(const ProlongedField& P, const Expr& e);

}  // namespace liereduce
