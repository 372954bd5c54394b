#pragma once

// Immutable symbolic expressions kept in an expanded rational normal form.
//
// Every Expr is canonical on construction: sums hold no nested sums, products
// no nested products, constants are folded, and children follow the total
// order given by compare(). Kernels (exp, log, sin, cos, tan), sums raised to
// negative or fractional powers and numbers raised to fractional powers are
// opaque atoms.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace liereduce {

using Rational = mpq_class;

enum class Kind : std::uint8_t { number, symbol, call, power, product, sum };

class Expr {
 public:
  Expr();  // zero
  Expr(int value);
  Expr(long value);
  Expr(const Rational& value);

  static Expr symbol(std::string name);

  Kind kind() const;
  bool is_number() const { return kind() == Kind::number; }
  bool is_symbol() const { return kind() == Kind::symbol; }
  bool is_call() const { return kind() == Kind::call; }
  bool is_power() const { return kind() == Kind::power; }
  bool is_product() const { return kind() == Kind::product; }
  bool is_sum() const { return kind() == Kind::sum; }
  bool is_zero() const;
  bool is_one() const;

  /// Value of a number node.
  const Rational& value() const;
  /// Symbol name or kernel name.
  const std::string& name() const;
  /// Children: sum terms, product factors (leading number first when present),
  /// {base, exponent} for powers, {argument} for calls.
  const std::vector<Expr>& args() const;
  /// Base and rational exponent of a power node.
  const Expr& base() const { return args()[0]; }
  const Rational& exponent() const { return args()[1].value(); }

  std::size_t hash() const;
  /// 64-bit summary of the symbols occurring below this node.
  std::uint64_t symbol_mask() const;
  /// Node count.
  std::size_t size() const;

  bool same_node(const Expr& other) const { return node_ == other.node_; }

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
  friend struct ExprAccess;
};

/// Total structural order: negative, zero or positive.
int compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

std::uint64_t symbol_bit(std::string_view name);

// Canonical constructors.
Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(const Expr& base, const Rational& exponent);
/// Symbolic exponents are rewritten as exp(exponent*log(base)).
Expr pow(const Expr& base, const Expr& exponent);
Expr call(std::string_view kernel, const Expr& argument);

Expr exp(const Expr& a);
Expr log(const Expr& a);

bool is_kernel(std::string_view name);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Splits a term into its rational coefficient and the remaining monomial.
std::pair<Rational, Expr> split_coefficient(const Expr& term);

/// Sum terms, or the expression itself as a one-element list.
std::vector<Expr> terms_of(const Expr& e);

/// Rebuilds `e` bottom-up through the canonical constructors.
Expr normalize(const Expr& e);

/// Multiplies a sum by every denominator atom of its terms. Exact: the result
/// is structurally zero only when `e` is identically zero.
Expr clear_denominators(const Expr& e);

/// Splits a sum as content * primitive, where content is the monomial made of
/// the atoms shared by every term.
std::pair<Expr, Expr> atom_content(const Expr& s);

/// Structural zero test, including the cleared-denominator form.
bool is_structurally_zero(const Expr& e);

/// Infix rendering in the parser's grammar.
std::string render(const Expr& e);

}  // namespace liereduce
