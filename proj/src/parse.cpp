#include "liereduce/parse.hpp"

#include <cctype>

#include "liereduce/errors.hpp"

namespace liereduce {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Resolver& resolve) : text_(text), resolve_(resolve) {}

  Expr run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  std::string_view text_;
  const Resolver& resolve_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expression() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms[0] : add(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Expr d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        break;
      }
    }
    return acc;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      Expr exponent = unary();
      if (base.is_zero() && exponent.is_number() && exponent.value() < 0) {
        throw ParseError("zero raised to a negative power", at);
      }
      return pow(base, exponent);
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Expr number() {
    const std::size_t start = pos_;
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
      seen_digit = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_++];
        --scale;
        seen_digit = true;
      }
    }
    if (!seen_digit) throw ParseError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      int sign = 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
        if (text_[p] == '-') sign = -1;
        ++p;
      }
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        long ex = 0;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
          ex = ex * 10 + (text_[p++] - '0');
          if (ex > 1000) throw ParseError("exponent too large", start);
        }
        scale += sign * ex;
        pos_ = p;
      }
    }
    mpz_class value(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(value, ten_pow) : Rational(value * ten_pow);
    q.canonicalize();
    return Expr(q);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (name == "exp" || name == "log" || name == "ln" || name == "sin" || name == "cos" ||
          name == "tan" || name == "sqrt") {
        ++pos_;
        Expr arg = expression();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        if ((name == "log" || name == "ln") && arg.is_number() && arg.value() <= 0) {
          throw ParseError("log of a nonpositive constant", start);
        }
        return call(name, arg);
      }
      throw ParseError("unknown function '" + std::string(name) + "'", start);
    }
    auto canonical = resolve_(name);
    if (!canonical) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    return Expr::symbol(*canonical);
  }
};

}  // namespace

Expr parse_expr(std::string_view text, const Resolver& resolve) {
  return Parser(text, resolve).run();
}

Expr parse_expr(std::string_view text, const std::set<std::string>& vocabulary) {
  Resolver r = [&vocabulary](std::string_view name) -> std::optional<std::string> {
    auto it = vocabulary.find(std::string(name));
    if (it == vocabulary.end()) return std::nullopt;
    return *it;
  };
  return parse_expr(text, r);
}

}  // namespace liereduce
