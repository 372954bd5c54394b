#pragma once

#include <vector>

#include "liereduce/expr.hpp"

namespace liereduce {

using Matrix = std::vector<std::vector<Expr>>;

/// Determinant by cofactor expansion along the sparsest row.
Expr determinant(const Matrix& a);

/// Solves a x = b by Cramer's rule (adjugate over determinant). Throws
/// PreconditionError when the determinant is identically zero.
std::vector<Expr> solve_linear(const Matrix& a, const std::vector<Expr>& b);

/// Inverse as adjugate over determinant.
Matrix inverse_matrix(const Matrix& a);

}  // namespace liereduce
