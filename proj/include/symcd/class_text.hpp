// Canonical text form of classes, shared by the CLI and the report files.
//
//   1/6*theta^3 - 1*x*theta^2 + 3*x^2*theta - 4*x^3
//
// Terms run from high to low total degree and, within a degree, from high
// to low theta exponent. Every non-constant term carries an explicit
// coefficient. The zero class prints as "0".
#pragma once

#include "symcd/nsring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcd {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline std::string format_class(const NSClass& c) {
  if (c.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> ordered(c.terms().begin(), c.terms().end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.theta > b.first.theta;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : ordered) {
    Rational mag = coeff;
    if (first) {
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) mag = -coeff;
    }
    out += to_string(mag);
    auto factor = [&out](const char* name, int power) {
      if (power == 0) return;
      out += '*';
      out += name;
      if (power > 1) out += "^" + std::to_string(power);
    };
    factor("x", e.x);
    factor("theta", e.theta);
  }
  return out;
}

namespace detail {

class ClassParser {
 public:
  ClassParser(const std::string& text, Ambient amb) : s_(text), amb_(amb) {}

  NSClass parse() {
    NSClass out(amb_);
    skip_ws();
    if (at_end()) throw ParseError("empty class expression", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      out += term(sign);
      skip_ws();
    }
    return out;
  }

 private:
  NSClass term(int sign) {
    const std::size_t start = pos_;
    Rational coeff = sign;
    int ex = 0;
    int et = 0;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= rational();
      need_factor = false;
    }
    for (;;) {
      skip_ws();
      if (!need_factor) {
        if (peek() != '*') break;
        ++pos_;
        skip_ws();
      }
      const std::size_t at = pos_;
      if (s_.compare(pos_, 5, "theta") == 0) {
        pos_ += 5;
        et += power();
      } else if (peek() == 'x') {
        ++pos_;
        ex += power();
      } else {
        throw ParseError("expected 'x' or 'theta'", at);
      }
      need_factor = false;
    }
    if (ex + et > amb_.d())
      throw ParseError("degree exceeds ambient (term degree " + std::to_string(ex + et) +
                           " > d=" + std::to_string(amb_.d()) + ")",
                       start);
    return NSClass::monomial(amb_, ex, et, coeff);
  }

  int power() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (digits.empty()) throw ParseError("expected exponent", at);
    if (digits.size() > 6) throw ParseError("exponent overflow", at);
    return std::stoi(digits);
  }

  Rational rational() {
    const std::size_t at = pos_;
    std::string num;
    while (std::isdigit(static_cast<unsigned char>(peek()))) num += s_[pos_++];
    if (peek() != '/') return Rational(Integer(num));
    ++pos_;
    std::string den;
    while (std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
    if (den.empty()) throw ParseError("expected denominator", pos_);
    if (Integer(den) == 0) throw ParseError("zero denominator", at);
    return Rational(Integer(num), Integer(den));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  Ambient amb_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a sum of terms `c*x^i*theta^j` (coefficient, factors and
/// exponents optional) into a class on `amb`. A term of degree above d is
/// rejected rather than truncated.
inline NSClass parse_class(const std::string& text, Ambient amb) {
  return detail::ClassParser(text, amb).parse();
}

}  // namespace symcd
