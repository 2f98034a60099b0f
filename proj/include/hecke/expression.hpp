#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "hecke/errors.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Recursive-descent parser for the expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INT)?
///   primary := INT | IDENT | '(' expr ')'
///
/// Identifiers are resolved through a callback, so the same grammar serves
/// scalars (q, e) and multivariate polynomials (named variables).
template <class T>
class ExpressionParser {
 public:
  using Resolver = std::function<std::optional<T>(std::string_view)>;

  ExpressionParser(std::string_view text, Resolver resolve)
      : s_(text), resolve_(std::move(resolve)) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  T expr() {
    T v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v = v * unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        T d = unary();
        try {
          v = v / d;
        } catch (const DivisionByZero&) {
          pos_ = at;
          fail("division by zero");
        }
      } else {
        return v;
      }
    }
  }

  T unary() {
    skip_ws();
    if (accept('-')) return -unary();
    return power();
  }

  T power() {
    T base = primary();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("exponent must be a nonnegative integer literal");
      }
      const std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      return pow(base, std::stol(digits));
    }
    return base;
  }

  T primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return T(Rational(mpz_class(read_digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      std::optional<T> v = resolve_(name);
      if (!v) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      return *v;
    }
    if (accept('(')) {
      T v = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  std::string_view s_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

/// Parses a scalar expression in the field F: `q` is the value bound to q in
/// F (the formal variable over Q(q)), `e` the generator of a cyclotomic field.
Scalar parse_scalar(std::string_view text, const FieldSpec& F);

/// Parses with `q` formal and `e` the generator of Q(zeta_order) when
/// order > 1; used before a field's q is known.
Scalar parse_scalar_raw(std::string_view text, int order);

}  // namespace hecke
