#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "liereduce/expr.hpp"

namespace liereduce {

/// Maps an identifier as written to the canonical variable name, or nothing
/// when the identifier is unknown.
using Resolver = std::function<std::optional<std::string>(std::string_view)>;

/// Parses infix text: + - * / ^, parentheses, decimal and integer literals
/// (kept exact), and the kernels exp, log (alias ln), sin, cos, tan, sqrt.
/// `^` is right associative and accepts a signed exponent. Implicit
/// multiplication is rejected. Identifiers may carry trailing primes.
Expr parse_expr(std::string_view text, const Resolver& resolve);
Expr parse_expr(std::string_view text, const std::set<std::string>& vocabulary);

}  // namespace liereduce
