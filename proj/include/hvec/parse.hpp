#pragma once

// Polynomial text grammar:
//   poly   := [sign] term (sign term)*
//   term   := coeff | [coeff ['*']] factor (['*'] factor)*
//   factor := name ['^' integer]
// Coefficients are decimal integers of any length, reduced into GF(p).

#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/polynomial.hpp"

namespace hvec {

/// Where a text fragment starts inside a larger document, for error locations.
struct TextOrigin {
  std::size_t line = 1;
  std::size_t column = 1;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring,
             std::span<const std::string> names, TextOrigin origin)
      : text_(text), ring_(ring), names_(names), origin_(origin) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      terms.push_back(parse_term(negative));
      first = false;
      skip_space();
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    const auto& F = ring_.field;
    Scalar c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_scalar();
      have_coeff = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_name_start(peek())) fail("expected a variable after '*'");
      }
    }
    Monomial m;
    bool have_factor = false;
    while (is_name_start(peek())) {
      std::size_t start = pos_;
      std::string name = parse_name();
      int index = lookup(name, start);
      int power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        power = parse_small_int();
      }
      m.set(static_cast<std::size_t>(index), m[static_cast<std::size_t>(index)] + power);
      have_factor = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_name_start(peek())) fail("expected a variable after '*'");
      }
    }
    if (!have_coeff && !have_factor) fail("expected a term");
    if (negative) c = F.neg(c);
    return Term{m, c};
  }

  Scalar parse_scalar() {
    const auto& F = ring_.field;
    Scalar v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = F.add(F.mul(v, 10), static_cast<Scalar>(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  int parse_small_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 0xFFFF) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int lookup(const std::string& name, std::size_t at) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    pos_ = at;
    fail("unknown variable '" + name + "'");
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = origin_.line, column = origin_.column;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  std::string_view text_;
  const Ring& ring_;
  std::span<const std::string> names_;
  TextOrigin origin_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<std::string> default_variable_names(int n) {
  static const char* four[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(n <= 4 ? four[i] : "x" + std::to_string(i + 1));
  return names;
}

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                                   std::span<const std::string> names,
                                   TextOrigin origin = {}) {
  if (names.size() != static_cast<std::size_t>(ring.nvars))
    throw DomainError("variable names do not match the ring");
  return detail::PolyParser(text, ring, names, origin).parse();
}

/// Parses with the default names x, y, z, w (or x1..xn beyond four).
inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  auto names = default_variable_names(ring.nvars);
  return parse_polynomial(text, ring, names);
}

}  // namespace hvec
