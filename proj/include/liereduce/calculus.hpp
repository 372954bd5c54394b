#pragma once

#include <map>
#include <set>
#include <string>

#include "liereduce/expr.hpp"

namespace liereduce {

using Bindings = std::map<std::string, Expr>;
using Point = std::map<std::string, double>;

/// Partial derivative with every other symbol held constant.
Expr diff(const Expr& e, const std::string& var);

/// Simultaneous substitution followed by normalization.
Expr substitute(const Expr& e, const Bindings& bindings);

std::set<std::string> free_vars(const Expr& e);
bool depends_on(const Expr& e, const std::string& var);

/// Double evaluation. Throws DomainError outside the real domain of a kernel
/// or power, and for unbound symbols.
double eval_numeric(const Expr& e, const Point& point);

}  // namespace liereduce
