#include "liereduce/expr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "liereduce/errors.hpp"

namespace liereduce {

struct Expr::Node {
  Kind kind;
  Rational value;
  std::string name;
  std::vector<Expr> args;
  std::size_t hash = 0;
  std::uint64_t mask = 0;
  std::size_t size = 1;
};

struct ExprAccess {
  static Expr make(Kind kind, Rational value, std::string name, std::vector<Expr> args) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->value = std::move(value);
    node->name = std::move(name);
    node->args = std::move(args);
    std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ULL;
    switch (kind) {
      case Kind::number:
        h ^= static_cast<std::size_t>(mpz_get_si(node->value.get_num_mpz_t())) * 1000003ULL;
        h ^= static_cast<std::size_t>(mpz_get_si(node->value.get_den_mpz_t())) * 7919ULL;
        break;
      case Kind::symbol:
        node->mask = symbol_bit(node->name);
        h ^= std::hash<std::string>{}(node->name);
        break;
      case Kind::call:
        h ^= std::hash<std::string>{}(node->name);
        break;
      default:
        break;
    }
    for (const auto& a : node->args) {
      h = (h * 1000003ULL) ^ a.hash();
      node->mask |= a.symbol_mask();
      node->size += a.size();
    }
    node->hash = h;
    return Expr(std::shared_ptr<const Expr::Node>(std::move(node)));
  }
};

namespace {

const Expr& zero_expr() {
  static const Expr z = ExprAccess::make(Kind::number, Rational(0), {}, {});
  return z;
}

const Expr& one_expr() {
  static const Expr o = ExprAccess::make(Kind::number, Rational(1), {}, {});
  return o;
}

Expr number(const Rational& q) {
  if (q == 0) return zero_expr();
  if (q == 1) return one_expr();
  return ExprAccess::make(Kind::number, q, {}, {});
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !mpz_fits_slong_p(q.get_num_mpz_t())) {
    throw Error("exponent too large: " + q.get_str());
  }
  return mpz_get_si(q.get_num_mpz_t());
}

Rational ipow(const Rational& q, long n) {
  if (n == 0) return 1;
  if (q == 0) {
    if (n < 0) throw DomainError("division by zero");
    return 0;
  }
  const unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), m);
  Rational r = n < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Expr raw_power(const Expr& base, const Rational& e) {
  return ExprAccess::make(Kind::power, 0, {}, {base, number(e)});
}

Expr raw_call(std::string name, const Expr& arg) {
  return ExprAccess::make(Kind::call, 0, std::move(name), {arg});
}

Expr raw_product(std::vector<Expr> args) {
  if (args.size() == 1) return args[0];
  return ExprAccess::make(Kind::product, 0, {}, std::move(args));
}

// q^e = coeff * atom_base^atom_exp, with atom_exp in (0,1) when an atom remains.
struct NumericPower {
  Rational coeff;
  std::optional<std::pair<Rational, Rational>> atom;
};

NumericPower numeric_power(const Rational& q, const Rational& e) {
  if (is_integer(e)) return {ipow(q, to_long(e)), std::nullopt};
  if (q == 0) {
    if (e < 0) throw DomainError("division by zero");
    return {0, std::nullopt};
  }
  if (q == 1) return {1, std::nullopt};
  const unsigned long den = mpz_get_ui(e.get_den_mpz_t());
  const long num = mpz_get_si(e.get_num_mpz_t());
  const bool negative = q < 0;
  const bool odd_root = den % 2 == 1;
  const Rational a = abs(q);
  mpz_class rn, rd;
  const bool exact_num = mpz_root(rn.get_mpz_t(), a.get_num_mpz_t(), den) != 0;
  const bool exact_den = mpz_root(rd.get_mpz_t(), a.get_den_mpz_t(), den) != 0;
  if (exact_num && exact_den && (!negative || odd_root)) {
    Rational root(rn, rd);
    root.canonicalize();
    Rational v = ipow(root, num);
    if (negative && (num % 2 != 0)) v = -v;
    return {v, std::nullopt};
  }
  const Rational fl = floor_of(e);
  const Rational frac = e - fl;
  if (negative && odd_root) {
    Rational c = ipow(a, to_long(fl));
    if (num % 2 != 0) c = -c;
    return {c, std::make_pair(a, frac)};
  }
  return {ipow(q, to_long(fl)), std::make_pair(q, frac)};
}

Expr build_monomial(const Rational& coeff, std::vector<Expr> factors) {
  if (coeff == 0) return zero_expr();
  if (factors.empty()) return number(coeff);
  if (coeff == 1 && factors.size() == 1) return factors[0];
  std::vector<Expr> args;
  args.reserve(factors.size() + 1);
  if (coeff != 1) args.push_back(number(coeff));
  for (auto& f : factors) args.push_back(std::move(f));
  return raw_product(std::move(args));
}

Expr scale_monomial(const Rational& c, const Expr& m) {
  if (c == 1) return m;
  if (m.is_product()) {
    std::vector<Expr> args{number(c)};
    args.insert(args.end(), m.args().begin(), m.args().end());
    return raw_product(std::move(args));
  }
  return raw_product({number(c), m});
}

// Factors (with exponents) of a coefficient-free monomial.
std::vector<std::pair<Expr, Rational>> monomial_factors(const Expr& m) {
  std::vector<std::pair<Expr, Rational>> out;
  auto one = [&](const Expr& f) {
    if (f.is_power()) {
      out.emplace_back(f.base(), f.exponent());
    } else if (!f.is_number()) {
      out.emplace_back(f, Rational(1));
    }
  };
  if (m.is_product()) {
    for (const auto& f : m.args()) one(f);
  } else {
    one(m);
  }
  return out;
}

enum class Content { atoms_only, numeric, positive_numeric };

// Factor order inside a product: by base, then by exponent.
bool factor_less(const Expr& a, const Expr& b) {
  const Expr& ba = a.is_power() ? a.base() : a;
  const Expr& bb = b.is_power() ? b.base() : b;
  const int c = compare(ba, bb);
  if (c != 0) return c < 0;
  const Rational ea = a.is_power() ? a.exponent() : Rational(1);
  const Rational eb = b.is_power() ? b.exponent() : Rational(1);
  return ea < eb;
}

// Writes a sum as M * P with M a monomial and P a sum whose terms share no
// common atom and (numeric modes) whose first term has coefficient one.
std::pair<Expr, Expr> sum_content(const Expr& s, Content mode);

struct MulAcc {
  Rational coeff = 1;
  std::map<Expr, Rational, ExprLess> powers;
  std::vector<Expr> exp_args;

  void absorb(const Expr& f, const Rational& k) {
    switch (f.kind()) {
      case Kind::number:
        if (k == 1) {
          coeff *= f.value();
        } else {
          powers[f] += k;
        }
        break;
      case Kind::symbol:
      case Kind::sum:
        powers[f] += k;
        break;
      case Kind::call:
        if (f.name() == "exp") {
          exp_args.push_back(k == 1 ? f.args()[0] : mul({number(k), f.args()[0]}));
        } else {
          powers[f] += k;
        }
        break;
      case Kind::power:
        absorb(f.base(), f.exponent() * k);
        break;
      case Kind::product:
        for (const auto& a : f.args()) absorb(a, k);
        break;
    }
  }

  Expr finish() {
    std::optional<Expr> exp_atom;
    // content pulled out of a sum may carry exp factors, hence the outer loop
    for (int pass = 0;; ++pass) {
      if (pass > 8) throw Error("product normalization did not terminate");
      for (int round = 0; !exp_args.empty(); ++round) {
        if (round > 8) throw Error("exp/log simplification did not terminate");
        std::vector<Expr> args;
        args.swap(exp_args);
        const Expr arg = add(std::move(args));
        std::vector<Expr> rest;
        for (const auto& t : terms_of(arg)) {
          auto [c, m] = split_coefficient(t);
          if (m.is_call() && m.name() == "log") {
            absorb(m.args()[0], c);
          } else {
            rest.push_back(t);
          }
        }
        if (exp_atom) rest.push_back(exp_atom->args()[0]);
        const Expr remaining = add(std::move(rest));
        if (remaining.is_zero()) {
          exp_atom.reset();
        } else {
          exp_atom = raw_call("exp", remaining);
        }
      }
      // Sums under negative or fractional powers lose their content, the same
      // way pow() treats them, so equal atoms merge whatever path built them.
      for (bool changed = true; changed;) {
        changed = false;
        for (auto it = powers.begin(); it != powers.end(); ++it) {
          const auto& [b, e] = *it;
          if (!b.is_sum() || e == 0 || (is_integer(e) && e > 0)) continue;
          auto [m, p] = sum_content(b, is_integer(e) ? Content::numeric : Content::atoms_only);
          if (m.is_one()) continue;
          const Rational k = e;
          powers.erase(it);
          absorb(m, k);
          absorb(p, k);
          changed = true;
          break;
        }
      }
      if (exp_args.empty()) break;
    }
    if (exp_atom) powers[*exp_atom] += 1;

    std::vector<Expr> plain;
    std::vector<std::pair<Expr, long>> expand;
    for (auto& [b, e] : powers) {
      if (e == 0) continue;
      if (b.is_number()) {
        const NumericPower np = numeric_power(b.value(), e);
        coeff *= np.coeff;
        if (np.atom) plain.push_back(raw_power(number(np.atom->first), np.atom->second));
        continue;
      }
      if (b.is_sum() && is_integer(e) && e > 0) {
        expand.emplace_back(b, to_long(e));
        continue;
      }
      plain.push_back(e == 1 ? b : raw_power(b, e));
    }
    if (coeff == 0) return zero_expr();
    std::sort(plain.begin(), plain.end(), factor_less);
    Expr mono = build_monomial(coeff, std::move(plain));
    if (expand.empty()) return mono;
    std::vector<Expr> terms{mono};
    for (const auto& [s, n] : expand) {
      for (long i = 0; i < n; ++i) {
        std::vector<Expr> next;
        next.reserve(terms.size() * s.args().size());
        for (const auto& t : terms) {
          for (const auto& a : s.args()) next.push_back(mul({t, a}));
        }
        terms = terms_of(add(std::move(next)));
      }
    }
    return add(std::move(terms));
  }

};

std::pair<Expr, Expr> sum_content(const Expr& s, Content mode) {
  std::map<Expr, Rational, ExprLess> common;
  bool first = true;
  for (const auto& t : s.args()) {
    auto [c, m] = split_coefficient(t);
    std::map<Expr, Rational, ExprLess> here;
    for (auto& [b, k] : monomial_factors(m)) here[b] += k;
    if (first) {
      common = std::move(here);
      first = false;
      continue;
    }
    // an atom missing from a term counts as exponent 0, so shared
    // denominators are pulled out even when some terms lack them
    for (auto it = common.begin(); it != common.end();) {
      auto h = here.find(it->first);
      if (h == here.end()) {
        if (it->second < 0) {
          ++it;
        } else {
          it = common.erase(it);
        }
      } else {
        if (h->second < it->second) it->second = h->second;
        ++it;
      }
    }
    for (auto& [b, k] : here) {
      if (k < 0 && !common.count(b)) common[b] = k;
    }
  }
  std::vector<Expr> factors;
  for (auto& [b, k] : common) {
    if (k == 0) continue;
    factors.push_back(k == 1 ? b : raw_power(b, k));
  }
  Expr content = one_expr();
  Expr primitive = s;
  if (!factors.empty()) {
    MulAcc acc;
    for (auto& f : factors) acc.absorb(f, 1);
    content = acc.finish();
    MulAcc inv_acc;
    inv_acc.absorb(content, -1);
    const Expr inverse = inv_acc.finish();
    std::vector<Expr> scaled;
    for (const auto& t : s.args()) scaled.push_back(mul({t, inverse}));
    primitive = add(std::move(scaled));
  }
  if (mode != Content::atoms_only && primitive.is_sum()) {
    const Rational lead = split_coefficient(primitive.args()[0]).first;
    if (lead != 1 && (mode == Content::numeric || lead > 0)) {
      std::vector<Expr> scaled;
      for (const auto& t : primitive.args()) {
        auto [c, m] = split_coefficient(t);
        scaled.push_back(scale_monomial(c / lead, m));
      }
      primitive = add(std::move(scaled));
      content = mul({content, number(lead)});
    }
  }
  return {content, primitive};
}

int kind_rank(Kind k) { return static_cast<int>(k); }

}  // namespace

Expr::Expr() : Expr(zero_expr()) {}
Expr::Expr(int value) : Expr(number(Rational(value))) {}
Expr::Expr(long value) : Expr(number(Rational(value))) {}
Expr::Expr(const Rational& value) : Expr(number(value)) {}

Expr Expr::symbol(std::string name) {
  if (name.empty()) throw Error("empty symbol name");
  return ExprAccess::make(Kind::symbol, 0, std::move(name), {});
}

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const { return node_->kind == Kind::number && node_->value == 0; }
bool Expr::is_one() const { return node_->kind == Kind::number && node_->value == 1; }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const std::vector<Expr>& Expr::args() const { return node_->args; }
std::size_t Expr::hash() const { return node_->hash; }
std::uint64_t Expr::symbol_mask() const { return node_->mask; }
std::size_t Expr::size() const { return node_->size; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

std::uint64_t symbol_bit(std::string_view name) {
  return std::uint64_t{1} << (std::hash<std::string_view>{}(name) % 64);
}

int compare(const Expr& a, const Expr& b) {
  if (a.same_node(b)) return 0;
  if (a.kind() != b.kind()) return kind_rank(a.kind()) < kind_rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::number:
      return cmp(a.value(), b.value()) < 0 ? -1 : (cmp(a.value(), b.value()) > 0 ? 1 : 0);
    case Kind::symbol:
      return a.name() < b.name() ? -1 : (a.name() > b.name() ? 1 : 0);
    case Kind::call:
      if (a.name() != b.name()) return a.name() < b.name() ? -1 : 1;
      return compare(a.args()[0], b.args()[0]);
    default:
      break;
  }
  const auto& x = a.args();
  const auto& y = b.args();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(x[i], y[i]);
    if (c != 0) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

std::pair<Rational, Expr> split_coefficient(const Expr& term) {
  if (term.is_number()) return {term.value(), one_expr()};
  if (term.is_product() && term.args()[0].is_number()) {
    const auto& a = term.args();
    if (a.size() == 2) return {a[0].value(), a[1]};
    return {a[0].value(), raw_product(std::vector<Expr>(a.begin() + 1, a.end()))};
  }
  return {Rational(1), term};
}

std::vector<Expr> terms_of(const Expr& e) {
  if (e.is_sum()) return e.args();
  return {e};
}

Expr add(std::vector<Expr> terms) {
  Rational constant = 0;
  std::map<Expr, Rational, ExprLess> acc;
  auto push = [&](const Expr& t) {
    auto [c, m] = split_coefficient(t);
    if (m.is_number()) {
      constant += c * m.value();
    } else {
      acc[m] += c;
    }
  };
  for (const auto& t : terms) {
    if (t.is_sum()) {
      for (const auto& a : t.args()) push(a);
    } else {
      push(t);
    }
  }
  std::vector<Expr> out;
  if (constant != 0) out.push_back(number(constant));
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back(scale_monomial(c, m));
  }
  if (out.empty()) return zero_expr();
  if (out.size() == 1) return out[0];
  return ExprAccess::make(Kind::sum, 0, {}, std::move(out));
}

Expr mul(std::vector<Expr> factors) {
  MulAcc acc;
  for (const auto& f : factors) {
    if (f.is_zero()) return zero_expr();
  }
  for (const auto& f : factors) acc.absorb(f, 1);
  return acc.finish();
}

Expr pow(const Expr& base, const Rational& exponent) {
  if (exponent == 0) return one_expr();
  if (exponent == 1) return base;
  if (base.is_zero()) {
    if (exponent < 0) throw DomainError("division by zero");
    return zero_expr();
  }
  if (base.is_sum() && !(is_integer(exponent) && exponent > 0)) {
    auto [m, p] = sum_content(base, is_integer(exponent) ? Content::numeric : Content::atoms_only);
    if (!m.is_one()) return mul({pow(m, exponent), pow(p, exponent)});
    return raw_power(base, exponent);
  }
  MulAcc acc;
  acc.absorb(base, exponent);
  return acc.finish();
}

Expr pow(const Expr& base, const Expr& exponent) {
  if (exponent.is_number()) return pow(base, exponent.value());
  return exp(mul({exponent, log(base)}));
}

bool is_kernel(std::string_view name) {
  return name == "exp" || name == "log" || name == "sin" || name == "cos" || name == "tan";
}

Expr exp(const Expr& a) {
  MulAcc acc;
  acc.exp_args.push_back(a);
  return acc.finish();
}

Expr log(const Expr& a) {
  switch (a.kind()) {
    case Kind::number:
      if (a.value() == 1) return zero_expr();
      return raw_call("log", a);
    case Kind::call:
      if (a.name() == "exp") return a.args()[0];
      return raw_call("log", a);
    case Kind::power:
      return mul({number(a.exponent()), log(a.base())});
    case Kind::product: {
      auto [c, m] = split_coefficient(a);
      if (c < 0) return raw_call("log", a);
      std::vector<Expr> parts;
      if (c != 1) parts.push_back(raw_call("log", number(c)));
      for (auto& [b, k] : monomial_factors(m)) parts.push_back(mul({number(k), log(b)}));
      return add(std::move(parts));
    }
    case Kind::sum: {
      auto [m, p] = sum_content(a, Content::positive_numeric);
      if (!m.is_one()) return add({log(m), log(p)});
      return raw_call("log", a);
    }
    case Kind::symbol:
      break;
  }
  return raw_call("log", a);
}

Expr call(std::string_view kernel, const Expr& argument) {
  if (kernel == "exp") return exp(argument);
  if (kernel == "log" || kernel == "ln") return log(argument);
  if (kernel == "sqrt") return pow(argument, Rational(1, 2));
  if (kernel == "sin" || kernel == "tan") {
    if (argument.is_zero()) return zero_expr();
    return raw_call(std::string(kernel), argument);
  }
  if (kernel == "cos") {
    if (argument.is_zero()) return one_expr();
    return raw_call("cos", argument);
  }
  throw Error("unknown kernel '" + std::string(kernel) + "'");
}

Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return add({a, mul({number(-1), b})}); }
Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return mul({a, pow(b, Rational(-1))}); }
Expr operator-(const Expr& a) { return mul({number(-1), a}); }

Expr normalize(const Expr& e) {
  switch (e.kind()) {
    case Kind::number:
    case Kind::symbol:
      return e;
    case Kind::call:
      return call(e.name(), normalize(e.args()[0]));
    case Kind::power:
      return pow(normalize(e.base()), e.exponent());
    case Kind::product: {
      std::vector<Expr> f;
      for (const auto& a : e.args()) f.push_back(normalize(a));
      return mul(std::move(f));
    }
    case Kind::sum: {
      std::vector<Expr> t;
      for (const auto& a : e.args()) t.push_back(normalize(a));
      return add(std::move(t));
    }
  }
  return e;
}

Expr clear_denominators(const Expr& e) {
  Expr cur = e;
  for (int round = 0; round < 4 && cur.is_sum(); ++round) {
    std::map<Expr, Rational, ExprLess> need;
    for (const auto& t : cur.args()) {
      for (auto& [b, k] : monomial_factors(split_coefficient(t).second)) {
        if (k < 0) {
          auto& slot = need[b];
          if (-k > slot) slot = -k;
        }
      }
    }
    if (need.empty()) break;
    std::vector<Expr> next;
    next.reserve(cur.args().size());
    for (const auto& t : cur.args()) {
      std::vector<Expr> fs{t};
      for (const auto& [b, k] : need) fs.push_back(k == 1 ? b : raw_power(b, k));
      next.push_back(mul(std::move(fs)));
    }
    cur = add(std::move(next));
  }
  return cur;
}

std::pair<Expr, Expr> atom_content(const Expr& s) {
  if (!s.is_sum()) return {s, Expr(1)};
  return sum_content(s, Content::atoms_only);
}

bool is_structurally_zero(const Expr& e) {
  if (e.is_zero()) return true;
  if (!e.is_sum()) return false;
  return clear_denominators(e).is_zero();
}

namespace {

std::string render_prec(const Expr& e, int ctx);

std::string exponent_text(const Rational& q) {
  if (is_integer(q) && q > 0) return q.get_str();
  return "(" + q.get_str() + ")";
}

std::string render_factor(const Expr& base, const Rational& k) {
  if (k == 1) return render_prec(base, 1);
  return render_prec(base, 2) + "^" + exponent_text(k);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_product(const Expr& e) {
  auto [c, m] = split_coefficient(e);
  std::vector<std::string> num, den;
  const Rational a = abs(c);
  if (a.get_num() != 1) num.push_back(a.get_num().get_str());
  if (a.get_den() != 1) den.push_back(a.get_den().get_str());
  const auto& factors = m.is_product() ? m.args() : std::vector<Expr>{m};
  for (const auto& f : factors) {
    if (f.is_power() && f.exponent() < 0) {
      den.push_back(render_factor(f.base(), -f.exponent()));
    } else if (f.is_power()) {
      num.push_back(render_factor(f.base(), f.exponent()));
    } else {
      num.push_back(render_prec(f, 1));
    }
  }
  std::string s = c < 0 ? "-" : "";
  s += num.empty() ? "1" : join(num, "*");
  if (!den.empty()) s += "/" + (den.size() == 1 ? den[0] : "(" + join(den, "*") + ")");
  return s;
}

std::string render_prec(const Expr& e, int ctx) {
  switch (e.kind()) {
    case Kind::number: {
      std::string s = e.value().get_str();
      if (ctx >= 1 && (e.value() < 0 || !is_integer(e.value()))) return "(" + s + ")";
      return s;
    }
    case Kind::symbol:
      return e.name();
    case Kind::call:
      return e.name() + "(" + render_prec(e.args()[0], 0) + ")";
    case Kind::power: {
      if (e.exponent() < 0) {
        std::string s = "1/" + render_factor(e.base(), -e.exponent());
        return ctx >= 1 ? "(" + s + ")" : s;
      }
      return render_factor(e.base(), e.exponent());
    }
    case Kind::product: {
      std::string s = render_product(e);
      return ctx >= 1 ? "(" + s + ")" : s;
    }
    case Kind::sum: {
      std::string s;
      bool first = true;
      for (const auto& t : e.args()) {
        const bool negative = split_coefficient(t).first < 0;
        if (first) {
          s += render_prec(t, 0);
        } else if (negative) {
          s += " - " + render_prec(-t, 0);
        } else {
          s += " + " + render_prec(t, 0);
        }
        first = false;
      }
      return ctx >= 1 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

std::string render(const Expr& e) { return render_prec(e, 0); }

}  // namespace liereduce
