#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/rational.hpp"
#include "cosov/exact/rational_function.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace cosov {

namespace detail {

// Recursive-descent reader for scalar entries:
//   entry   := '(' laurent ')' [ '/' '(' laurent ')' ] | laurent
//   laurent := [sign] term { sign term }
//   term    := number [ '/' number ] [ '*' qpow ] | qpow
//   qpow    := 'q' [ '^' [sign] digits ]
// Blanks are skipped between tokens.
class ScalarReader {
public:
  ScalarReader(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), column0_(column0) {}

  RationalFunction read_entry() {
    skip_blanks();
    RationalFunction value;
    if (peek() == '(') {
      value = parenthesized();
      skip_blanks();
      if (peek() == '/') {
        ++pos_;
        skip_blanks();
        if (peek() != '(') fail("expected '(' after '/' in rational function");
        RationalFunction den = parenthesized();
        if (den.is_zero()) fail("zero denominator");
        value /= den;
      }
    } else {
      value = laurent();
    }
    skip_blanks();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return value;
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column0_ + pos_);
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  RationalFunction parenthesized() {
    ++pos_;  // '('
    RationalFunction v = laurent();
    skip_blanks();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return v;
  }

  Integer digits() {
    skip_blanks();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RationalFunction qpow() {
    ++pos_;  // 'q'
    skip_blanks();
    if (peek() != '^') return RationalFunction::q();
    ++pos_;
    skip_blanks();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    Integer e = digits();
    if (e > 100000) fail("exponent too large");
    int k = static_cast<int>(e);
    return RationalFunction::q().pow(neg ? -k : k);
  }

  RationalFunction term() {
    skip_blanks();
    if (peek() == 'q') return qpow();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number or 'q'");
    Rational c(digits());
    skip_blanks();
    if (peek() == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '(') {
      ++pos_;
      Integer d = digits();
      if (d == 0) fail("zero denominator");
      c /= Rational(d);
    }
    skip_blanks();
    if (peek() == '*') {
      ++pos_;
      skip_blanks();
      if (peek() != 'q') fail("expected 'q' after '*'");
      return RationalFunction(c) * qpow();
    }
    return RationalFunction(c);
  }

  RationalFunction laurent() {
    skip_blanks();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    RationalFunction acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_blanks();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RationalFunction t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a scalar such as "3", "-2/3", "q + q^-1", "2*q^3" or "(1+q^2)/(q)".
/// Errors carry the given line and a column offset by `column0` (1-based
/// column of the first character of `text`).
inline RationalFunction parse_scalar(std::string_view text, std::size_t line = 0,
                                     std::size_t column0 = 1) {
  return detail::ScalarReader(text, line, column0).read_entry();
}

/// Parses a scalar that must not involve q.
inline Rational parse_rational(std::string_view text, std::size_t line = 0, std::size_t column0 = 1) {
  RationalFunction f = parse_scalar(text, line, column0);
  if (!f.is_constant()) throw ParseError("expected a rational number, got '" + std::string(text) + "'", line, column0);
  return f.constant_value();
}

}  // namespace cosov
