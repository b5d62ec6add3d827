#pragma once

// Expression grammar over the generators X, Y, H:
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := ('+' | '-') unary | power
//   power    := primary ('^' exponent)?
//   exponent := ['-'] digits | '(' ['-'] digits ')'
//   primary  := digits | 'X' | 'Y' | 'H' | '(' expr ')'
//
// Juxtaposition is an error ("2H" must be written "2*H"). The right operand of
// '/' and the base of a negative power must be a nonzero homogeneous element,
// which is invertible in B. In A1 mode both are restricted so the result stays
// inside the Weyl algebra.

#include <cctype>
#include <string>
#include <string_view>

#include "weyl/graded.hpp"

namespace weyl {

struct ParseOptions {
  bool a1_only = false;
  int max_exponent = 512;
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, ParseOptions opts) : s_(text), opts_(opts) {}

  GradedElement run() {
    GradedElement e = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      if (starts_operand()) fail("implicit multiplication is not allowed");
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_operand() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  GradedElement expr() {
    GradedElement acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  GradedElement term() {
    GradedElement acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        GradedElement d = unary();
        acc *= invert(d, at, "divisor");
      } else {
        if (starts_operand()) fail("implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  GradedElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  GradedElement power() {
    std::size_t at = (skip_ws(), pos_);
    GradedElement base = primary();
    if (!accept('^')) return base;
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (opts_.a1_only) {
      pos_ = at;
      fail("negative exponent is not allowed in A1");
    }
    return invert(base, at, "base of a negative power").pow(static_cast<unsigned>(-e));
  }

  long exponent() {
    bool paren = accept('(');
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stol(digits) > opts_.max_exponent) {
      pos_ = start;
      fail("exponent too large");
    }
    if (paren && !accept(')')) fail("expected ')'");
    long v = std::stol(digits);
    return neg ? -v : v;
  }

  GradedElement primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return GradedElement::scalar(Rat(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == '(') {
      ++pos_;
      GradedElement e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "X") return GradedElement::x();
      if (id == "Y") return GradedElement::y();
      if (id == "H") return GradedElement::h();
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  GradedElement invert(const GradedElement& d, std::size_t at, const char* what) {
    if (d.is_zero() || !d.is_homogeneous()) {
      pos_ = at;
      fail(std::string(what) + " must be a nonzero homogeneous element");
    }
    if (opts_.a1_only && !d.is_scalar()) {
      pos_ = at;
      fail(std::string(what) + " must be a nonzero constant in A1");
    }
    return d.inverse();
  }

  std::string_view s_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression into its normal form in B = Q(H)[X, X^-1; sigma].
inline GradedElement parse(std::string_view text, ParseOptions opts = {}) {
  return detail::ExpressionParser(text, opts).run();
}

}  // namespace weyl
