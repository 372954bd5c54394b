#include "liereduce/algebra.hpp"

#include <map>
#include <set>

#include "liereduce/equiv.hpp"
#include "liereduce/errors.hpp"

namespace liereduce {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

// Row-reduces in place and returns the pivot column of each nonzero row.
std::vector<int> rref(QMatrix& a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const Rational lead = a[row][c];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::map<Expr, Rational, ExprLess> monomials(const Expr& e) {
  std::map<Expr, Rational, ExprLess> out;
  for (const auto& t : terms_of(e)) {
    if (t.is_zero()) continue;
    auto [c, m] = split_coefficient(t);
    out[m] += c;
  }
  return out;
}

int rank_of(QMatrix rows, int cols) { return static_cast<int>(rref(rows, cols).size()); }

}  // namespace

VectorField commutator(const VectorField& X, const VectorField& Y) {
  if (!(X.space == Y.space)) throw PreconditionError("fields live on different spaces");
  const int p = X.space.p();
  std::vector<Expr> xi, eta;
  for (int i = 0; i < X.dimension(); ++i) {
    (i < p ? xi : eta).push_back(X.apply(Y.coefficient(i)) - Y.apply(X.coefficient(i)));
  }
  return VectorField(X.space, xi, eta);
}

std::optional<std::vector<Rational>> express_in_span(const VectorField& Z, const std::vector<VectorField>& gens) {
  const int q = static_cast<int>(gens.size());
  QMatrix rows;
  for (int v = 0; v < Z.dimension(); ++v) {
    std::vector<std::map<Expr, Rational, ExprLess>> g(q);
    std::set<Expr, ExprLess> keys;
    for (int k = 0; k < q; ++k) {
      g[k] = monomials(gens[k].coefficient(v));
      for (auto& [m, c] : g[k]) keys.insert(m);
    }
    auto z = monomials(Z.coefficient(v));
    for (auto& [m, c] : z) keys.insert(m);
    for (const auto& m : keys) {
      std::vector<Rational> row(q + 1);
      for (int k = 0; k < q; ++k) {
        auto it = g[k].find(m);
        if (it != g[k].end()) row[k] = it->second;
      }
      auto it = z.find(m);
      if (it != z.end()) row[q] = it->second;
      rows.push_back(std::move(row));
    }
  }
  const auto pivots = rref(rows, q + 1);
  std::vector<Rational> c(q);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == q) return std::nullopt;  // inconsistent
    c[pivots[r]] = rows[r][q];
  }
  // monomial matching can miss identities between atoms; confirm directly
  for (int v = 0; v < Z.dimension(); ++v) {
    Expr sum;
    for (int k = 0; k < q; ++k) sum = sum + Expr(c[k]) * gens[k].coefficient(v);
    if (!equiv(sum, Z.coefficient(v))) return std::nullopt;
  }
  return c;
}

bool AlgebraTable::closed() const {
  for (const auto& row : brackets) {
    for (const auto& b : row) {
      if (!b.in_span) return false;
    }
  }
  return true;
}

std::string AlgebraTable::render_combination(const std::vector<Rational>& c) const {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rational a = c[k];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    out += a.get_str() + "*" + names[k];
  }
  return out.empty() ? "0" : out;
}

AlgebraTable structure_constants(const std::vector<VectorField>& gens, std::vector<std::string> names) {
  AlgebraTable t;
  t.generators = gens;
  if (names.empty()) {
    for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("X" + std::to_string(k + 1));
  }
  if (names.size() != gens.size()) throw PreconditionError("one name per generator");
  t.names = std::move(names);
  const std::size_t q = gens.size();
  t.brackets.assign(q, std::vector<Bracket>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      Bracket b;
      b.value = commutator(gens[i], gens[j]);
      if (auto c = express_in_span(b.value, gens)) {
        b.in_span = true;
        b.coefficients = *c;
      }
      Bracket r = b;
      r.value = scale(b.value, -1);
      for (auto& x : r.coefficients) x = -x;
      t.brackets[i][j] = std::move(b);
      if (i != j) t.brackets[j][i] = std::move(r);
    }
  }
  return t;
}

Solvability derived_series(const AlgebraTable& table) {
  if (!table.closed()) throw PreconditionError("brackets do not close on the generators");
  const int q = static_cast<int>(table.names.size());
  QMatrix basis;
  for (int k = 0; k < q; ++k) {
    std::vector<Rational> e(q);
    e[k] = 1;
    basis.push_back(e);
  }
  Solvability out;
  out.derived_series.push_back(rank_of(basis, q));
  while (out.derived_series.back() > 0) {
    QMatrix next;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        std::vector<Rational> v(q);
        for (int i = 0; i < q; ++i) {
          if (basis[a][i] == 0) continue;
          for (int j = 0; j < q; ++j) {
            if (basis[b][j] == 0) continue;
            const Rational f = basis[a][i] * basis[b][j];
            const auto& c = table.brackets[i][j].coefficients;
            for (int k = 0; k < q; ++k) v[k] += f * c[k];
          }
        }
        next.push_back(std::move(v));
      }
    }
    const auto piv = rref(next, q);
    next.resize(piv.size());
    const int dim = static_cast<int>(piv.size());
    if (dim == out.derived_series.back()) break;
    out.derived_series.push_back(dim);
    basis = std::move(next);
  }
  out.solvable = out.derived_series.back() == 0;
  return out;
}

OrderAdvice reduction_order_advice(const AlgebraTable& table, int i, int j) {
  const int q = static_cast<int>(table.names.size());
  if (i < 0 || j < 0 || i >= q || j >= q || i == j) throw PreconditionError("need two distinct generators");
  const Bracket& b = table.brackets[i][j];
  if (!b.in_span) throw PreconditionError("bracket is outside the span of the generators");
  OrderAdvice out;
  const auto& c = b.coefficients;
  bool only_i = true, only_j = true, zero = true;
  for (int k = 0; k < q; ++k) {
    if (c[k] == 0) continue;
    zero = false;
    if (k != i) only_i = false;
    if (k != j) only_j = false;
  }
  const std::string& xi = table.names[i];
  const std::string& xj = table.names[j];
  if (zero) {
    out.abelian = true;
    out.first = i;
    out.second = j;
    out.text = xi + " and " + xj + " commute: either order keeps the other one a point symmetry";
    return out;
  }
  if (only_i) {
    out.first = i;
    out.second = j;
  } else if (only_j) {
    out.first = j;
    out.second = i;
  } else {
    throw PreconditionError("[" + xi + ", " + xj + "] = " + table.render_combination(c) +
                            " is not a multiple of either generator");
  }
  const std::string& f = table.names[out.first];
  const std::string& s = table.names[out.second];
  out.text = "reduce by " + f + " first: " + s + " then stays a point symmetry; reducing by " + s +
             " first turns " + f + " nonlocal";
  return out;
}

}  // namespace liereduce
