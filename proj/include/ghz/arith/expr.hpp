#pragma once

/**
 * @file expr.hpp
 * @brief Text syntax for field elements, polynomials and rational functions.
 *
 * Grammar (blanks ignored):
 *   expr   := term (('+'|'-') term)*
 *   term   := unary (('*'|'/') unary | unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' '-'? integer)?
 *   atom   := integer | 't' | 'l' | '(' expr ')'
 * 'l' denotes the transcendental l of F_p(l).
 */

#include "ghz/arith/poly.hpp"

#include <cctype>
#include <string_view>

namespace ghz {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view s, const BaseField& k, char var) : s_(s), k_(k), var_(var) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in '" + std::string(s_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
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
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'l' || c == '(';
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else if (starts_atom()) {
        r *= unary();
      } else {
        return r;
      }
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    if (!eat('(')) {
      long e = integer();
      if (neg && base.is_zero()) fail("division by zero");
      return base.pow(neg ? -e : e);
    }
    bool neg2 = eat('-');
    long e = integer();
    if (!eat(')')) fail("expected ')'");
    if ((neg != neg2) && base.is_zero()) fail("division by zero");
    return base.pow((neg != neg2) ? -e : e);
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc(Poly::variable(k_, var_));
    }
    if (c == 'l') {
      if (k_.kind != FieldKind::RationalFunctions) fail("'l' is only available over F_p(l)");
      ++pos_;
      return RatFunc::constant(Scalar::lambda(k_), var_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc::constant(Scalar::from_integer(k_, Integer(std::string(s_.substr(start, pos_ - start)))), var_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  BaseField k_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(std::string_view s, const BaseField& k, char var = 't') {
  try {
    return detail::ExprParser(s, k, var).parse();
  } catch (const std::domain_error& e) {
    throw ParseError("in '" + std::string(s) + "': " + e.what());
  }
}

inline Poly parse_poly(std::string_view s, const BaseField& k, char var = 't') {
  RatFunc r = parse_ratfunc(s, k, var);
  if (!r.is_polynomial()) throw ParseError("'" + std::string(s) + "' is not a polynomial");
  return r.num();
}

inline Scalar parse_scalar(std::string_view s, const BaseField& k) {
  RatFunc r = parse_ratfunc(s, k);
  if (!r.is_constant()) throw ParseError("'" + std::string(s) + "' is not a constant");
  return r.num().coeff(0);
}

}  // namespace ghz
