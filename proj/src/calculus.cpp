#include "liereduce/calculus.hpp"

#include <cmath>

#include "liereduce/errors.hpp"

namespace liereduce {

namespace {

bool may_contain(const Expr& e, std::uint64_t bit) { return (e.symbol_mask() & bit) != 0; }

Expr diff_bit(const Expr& e, const std::string& var, std::uint64_t bit) {
  if (!may_contain(e, bit)) return Expr(0);
  switch (e.kind()) {
    case Kind::number:
      return Expr(0);
    case Kind::symbol:
      return Expr(e.name() == var ? 1 : 0);
    case Kind::sum: {
      std::vector<Expr> terms;
      for (const auto& t : e.args()) terms.push_back(diff_bit(t, var, bit));
      return add(std::move(terms));
    }
    case Kind::product: {
      const auto& f = e.args();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Expr d = diff_bit(f[i], var, bit);
        if (d.is_zero()) continue;
        std::vector<Expr> factors;
        factors.reserve(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) factors.push_back(j == i ? d : f[j]);
        terms.push_back(mul(std::move(factors)));
      }
      return add(std::move(terms));
    }
    case Kind::power: {
      Expr d = diff_bit(e.base(), var, bit);
      if (d.is_zero()) return Expr(0);
      const Rational& q = e.exponent();
      return mul({Expr(q), pow(e.base(), q - 1), d});
    }
    case Kind::call: {
      const Expr& a = e.args()[0];
      Expr d = diff_bit(a, var, bit);
      if (d.is_zero()) return Expr(0);
      const std::string& k = e.name();
      if (k == "exp") return mul({e, d});
      if (k == "log") return mul({d, pow(a, Rational(-1))});
      if (k == "sin") return mul({call("cos", a), d});
      if (k == "cos") return mul({Expr(-1), call("sin", a), d});
      if (k == "tan") return mul({add({Expr(1), pow(e, Rational(2))}), d});
      throw Error("no derivative rule for kernel '" + k + "'");
    }
  }
  return Expr(0);
}

Expr substitute_mask(const Expr& e, const Bindings& b, std::uint64_t mask) {
  if ((e.symbol_mask() & mask) == 0) return e;
  switch (e.kind()) {
    case Kind::number:
      return e;
    case Kind::symbol: {
      auto it = b.find(e.name());
      return it == b.end() ? e : it->second;
    }
    case Kind::call:
      return call(e.name(), substitute_mask(e.args()[0], b, mask));
    case Kind::power:
      return pow(substitute_mask(e.base(), b, mask), e.exponent());
    case Kind::product: {
      std::vector<Expr> f;
      for (const auto& a : e.args()) f.push_back(substitute_mask(a, b, mask));
      return mul(std::move(f));
    }
    case Kind::sum: {
      std::vector<Expr> t;
      for (const auto& a : e.args()) t.push_back(substitute_mask(a, b, mask));
      return add(std::move(t));
    }
  }
  return e;
}

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.is_symbol()) {
    out.insert(e.name());
    return;
  }
  for (const auto& a : e.args()) collect(a, out);
}

bool contains_symbol(const Expr& e, const std::string& var, std::uint64_t bit) {
  if (!may_contain(e, bit)) return false;
  if (e.is_symbol()) return e.name() == var;
  for (const auto& a : e.args()) {
    if (contains_symbol(a, var, bit)) return true;
  }
  return false;
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite value in ") + what);
  return v;
}

}  // namespace

Expr diff(const Expr& e, const std::string& var) { return diff_bit(e, var, symbol_bit(var)); }

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  std::uint64_t mask = 0;
  for (const auto& [name, value] : bindings) mask |= symbol_bit(name);
  return substitute_mask(e, bindings, mask);
}

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

bool depends_on(const Expr& e, const std::string& var) {
  return contains_symbol(e, var, symbol_bit(var));
}

double eval_numeric(const Expr& e, const Point& point) {
  switch (e.kind()) {
    case Kind::number:
      return e.value().get_d();
    case Kind::symbol: {
      auto it = point.find(e.name());
      if (it == point.end()) throw DomainError("unbound symbol '" + e.name() + "'");
      return it->second;
    }
    case Kind::sum: {
      double s = 0;
      for (const auto& t : e.args()) s += eval_numeric(t, point);
      return checked(s, "sum");
    }
    case Kind::product: {
      double p = 1;
      for (const auto& f : e.args()) p *= eval_numeric(f, point);
      return checked(p, "product");
    }
    case Kind::power: {
      const double b = eval_numeric(e.base(), point);
      const Rational& q = e.exponent();
      if (q.get_den() == 1) {
        if (b == 0 && q < 0) throw DomainError("division by zero");
        return checked(std::pow(b, q.get_d()), "power");
      }
      if (b < 0) {
        if (mpz_even_p(q.get_den_mpz_t())) throw DomainError("fractional power of a negative value");
        const double mag = std::pow(-b, q.get_d());
        return checked(mpz_odd_p(q.get_num_mpz_t()) ? -mag : mag, "power");
      }
      if (b == 0 && q < 0) throw DomainError("division by zero");
      return checked(std::pow(b, q.get_d()), "power");
    }
    case Kind::call: {
      const double a = eval_numeric(e.args()[0], point);
      const std::string& k = e.name();
      if (k == "exp") return checked(std::exp(a), "exp");
      if (k == "log") {
        if (a <= 0) throw DomainError("log of a nonpositive value");
        return std::log(a);
      }
      if (k == "sin") return std::sin(a);
      if (k == "cos") return std::cos(a);
      if (k == "tan") return checked(std::tan(a), "tan");
      throw Error("cannot evaluate kernel '" + k + "'");
    }
  }
  return 0;
}

}  // namespace liereduce
