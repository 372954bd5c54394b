#include "liereduce/linsolve.hpp"

#include "liereduce/equiv.hpp"
#include "liereduce/errors.hpp"

namespace liereduce {

namespace {

Matrix minor_of(const Matrix& a, std::size_t row, std::size_t col) {
  Matrix m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == row) continue;
    std::vector<Expr> r;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != col) r.push_back(a[i][j]);
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Expr determinant(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return Expr(1);
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  std::size_t best = 0, best_zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t zeros = 0;
    for (const auto& e : a[i]) zeros += e.is_zero();
    if (zeros > best_zeros) {
      best = i;
      best_zeros = zeros;
    }
  }
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[best][j].is_zero()) continue;
    const int sign = (best + j) % 2 == 0 ? 1 : -1;
    terms.push_back(mul({Expr(sign), a[best][j], determinant(minor_of(a, best, j))}));
  }
  return add(std::move(terms));
}

std::vector<Expr> solve_linear(const Matrix& a, const std::vector<Expr>& b) {
  const std::size_t n = a.size();
  const Expr det = determinant(a);
  if (is_structurally_zero(det)) throw PreconditionError("singular linear system");
  const Expr inv = pow(det, Rational(-1));
  std::vector<Expr> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix ak = a;
    for (std::size_t i = 0; i < n; ++i) ak[i][k] = b[i];
    x[k] = mul({determinant(ak), inv});
  }
  return x;
}

Matrix inverse_matrix(const Matrix& a) {
  const std::size_t n = a.size();
  const Expr det = determinant(a);
  if (is_structurally_zero(det)) throw PreconditionError("singular matrix");
  const Expr inv = pow(det, Rational(-1));
  Matrix out(n, std::vector<Expr>(n));
  if (n == 1) {
    out[0][0] = inv;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int sign = (i + j) % 2 == 0 ? 1 : -1;
      out[j][i] = mul({Expr(sign), determinant(minor_of(a, i, j)), inv});
    }
  }
  return out;
}

}  // namespace liereduce
