#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liereduce/jet.hpp"

namespace liereduce {

/// [X, Y] with components X(Y_v) - Y(X_v).
VectorField commutator(const VectorField& X, const VectorField& Y);

/// Rational coefficients c with Z = sum_k c_k gens_k, found by matching
/// monomials and confirmed by equiv. Nothing when Z is outside the span.
std::optional<std::vector<Rational>> express_in_span(const VectorField& Z, const std::vector<VectorField>& gens);

struct Bracket {
  bool in_span = false;
  std::vector<Rational> coefficients;
  VectorField value;
};

struct AlgebraTable {
  std::vector<std::string> names;
  std::vector<VectorField> generators;
  std::vector<std::vector<Bracket>> brackets;  // brackets[i][j] = [X_i, X_j]

  bool closed() const;
  /// e.g. "-1*X1 + 2*X3", or "0".
  std::string render_combination(const std::vector<Rational>& c) const;
};

AlgebraTable structure_constants(const std::vector<VectorField>& gens, std::vector<std::string> names = {});

struct Solvability {
  bool solvable = false;
  /// Dimensions of g, [g,g], [[g,g],[g,g]], ... until they stop changing.
  std::vector<int> derived_series;
};

/// Needs a closed table.
Solvability derived_series(const AlgebraTable& table);

struct OrderAdvice {
  bool abelian = false;
  /// Index of the generator to reduce by first; the other one is then
  /// predicted to survive as a point symmetry, while the reverse order is
  /// predicted to give a nonlocal one.
  int first = -1;
  int second = -1;
  std::string text;
};

/// Advice for a pair with [X_i, X_j] = c X_i or c X_j. Throws
/// PreconditionError for any other bracket.
OrderAdvice reduction_order_advice(const AlgebraTable& table, int i, int j);

}  // namespace liereduce
