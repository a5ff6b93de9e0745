#pragma once

// Recursive-descent parser for ASCII algebra expressions:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*'|'/') power)*
//   power   := primary ('^' natural)?
//   primary := natural | identifier | '(' expr ')'
//
// Identifiers may contain letters, digits, '_' and a trailing prime (y7').
// The value type is supplied by an Ops policy so polynomials and CDGA
// elements share one grammar.

#include "cartan/rational.hpp"

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cartan {

/// Expression syntax or semantic error. `column` is 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, std::string token, const std::string& message)
      : std::invalid_argument(message + (token.empty() ? std::string() : " '" + token + "'") +
                              " at column " + std::to_string(column)),
        column_(column),
        token_(std::move(token)) {}
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t column_;
  std::string token_;
};

namespace detail {

// Ops must provide:
//   Value constant(const Rational&)
//   Value variable(std::string_view name)          // throws std::invalid_argument if unknown
//   Value add(Value, const Value&), sub(...), mul(...)
//   Value negate(Value)
//   Value power(const Value&, unsigned)
//   std::optional<Rational> as_constant(const Value&)
template <class Value, class Ops>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError(1, "", "empty expression");
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) throw error("unexpected token");
    return v;
  }

 private:
  Value expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Value acc = term();
    if (negate) acc = ops_.negate(std::move(acc));
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Value rhs = term();
      acc = c == '+' ? ops_.add(std::move(acc), rhs) : ops_.sub(std::move(acc), rhs);
    }
    return acc;
  }

  Value term() {
    Value acc = power();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') break;
      const std::size_t at = pos_;
      ++pos_;
      Value rhs = power();
      if (c == '*') {
        acc = ops_.mul(std::move(acc), rhs);
      } else {
        const auto divisor = ops_.as_constant(rhs);
        if (!divisor) throw ParseError(at + 1, "/", "division by a non-constant");
        if (*divisor == 0) throw ParseError(at + 1, "/", "division by zero");
        acc = ops_.mul(std::move(acc), ops_.constant(Rational(1) / *divisor));
      }
    }
    return acc;
  }

  Value power() {
    Value base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw error("expected exponent");
      if (pos_ - start > 6) throw ParseError(start + 1, std::string(text_.substr(start, pos_ - start)), "exponent too large");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return ops_.power(base, e);
    }
    return base;
  }

  Value primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      skip_space();
      if (peek() != ')') throw error("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      try {
        return ops_.variable(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(start + 1, std::string(name), "unknown variable");
      }
    }
    throw error(pos_ == text_.size() ? "unexpected end of expression" : "unexpected token");
  }

  ParseError error(const std::string& message) const {
    std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string();
    return ParseError(pos_ + 1, token, message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace detail
}  // namespace cartan
