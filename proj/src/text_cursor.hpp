#pragma once

// Shared scanning helpers for the small hand-written parsers.

#include "stevin/errors.hpp"
#include "stevin/exact.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace stevin::detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // No whitespace skipping.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alpha(text_[pos_]) || text_[pos_] == '_' ||
                                   (pos_ > start && is_digit(text_[pos_]))))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Boost reads a leading 0 as an octal prefix, so strip it first.
inline Integer decimal_integer(const std::string& digits) {
  const std::size_t first = digits.find_first_not_of('0');
  return first == std::string::npos ? Integer(0) : Integer(digits.substr(first));
}

// nat | nat "/" nat | nat "." digits
inline Rational read_unsigned_rational(Cursor& cur) {
  std::string whole = cur.digits();
  if (whole.empty()) cur.fail("expected a number");
  if (cur.peek_raw() == '.') {
    cur.accept('.');
    std::size_t frac_pos = cur.pos();
    std::string frac;
    while (is_digit(cur.peek_raw())) {
      frac.push_back(cur.peek_raw());
      cur.accept(cur.peek_raw());
    }
    if (frac.empty()) throw ParseError("expected digits after '.'", frac_pos);
    return Rational(decimal_integer(whole + frac), pow10(frac.size()));
  }
  if (cur.peek() == '/' ) {
    // Only a fraction when digits follow; otherwise leave '/' to the caller.
    Cursor probe = cur;
    probe.accept('/');
    if (!is_digit(probe.peek())) return Rational(decimal_integer(whole));
    cur = probe;
    std::string den = cur.digits();
    const Integer d = decimal_integer(den);
    if (d == 0) cur.fail("zero denominator");
    return Rational(decimal_integer(whole), d);
  }
  return Rational(decimal_integer(whole));
}

}  // namespace stevin::detail
