#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "uqosp/coeffield/scalar.hpp"
#include "uqosp/error.hpp"

namespace uqosp {

/// Recursive-descent parser for +, -, *, /, ^int and parentheses over an
/// algebra described by `Ops`:
///   using value_type;
///   value_type integer(const mpz_class&);
///   value_type identifier(const std::string&);        // throws ParseError
///   value_type generator(const std::string& inside);  // text of E(...)
///   value_type divide(const value_type&, const value_type&);
///   value_type power(const value_type&, int);
/// and +, -, * on value_type.
template <class Ops>
class ExprParser {
 public:
  using V = typename Ops::value_type;

  ExprParser(std::string_view text, Ops ops) : s_(text), ops_(std::move(ops)) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) v = v * unary();
      else if (eat('/')) v = ops_.divide(v, unary());
      else return v;
    }
  }

  V unary() {
    if (eat('-')) return ops_.integer(0) - unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    V base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else if (eat('(')) {
      neg = eat('-');
      int e = integer_literal();
      if (!eat(')')) fail("expected ')'");
      return ops_.power(base, neg ? -e : e);
    }
    int e = integer_literal();
    return ops_.power(base, neg ? -e : e);
  }

  int integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "E") {
        if (!eat('(')) fail("expected '(' after E");
        std::size_t open = pos_;
        std::size_t close = s_.find(')', open);
        if (close == std::string_view::npos) fail("unterminated E(");
        pos_ = close + 1;
        return ops_.generator(std::string(s_.substr(open, close - open)));
      }
      try {
        return ops_.identifier(name);
      } catch (const ParseError& e) {
        fail(e.what());
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  Ops ops_;
  std::size_t pos_ = 0;
};

/// Parses the text form produced by Scalar::to_string (and any expression
/// in q, s_a, s_b with integer constants).
Scalar parse_scalar(std::string_view text);

/// Integer power of a scalar (negative exponents invert).
Scalar scalar_pow(const Scalar& x, int e);

}  // namespace uqosp
