#pragma once

// Ideal file format:
//
//   # comment
//   label: ex1
//   vars: x, y, z, w
//   char: 65521
//   forms: 2*x - 5*y + 13*z - 7*w; -11*x - 4*y + 5*z + 9*w
//   gens: x^2*w^2, x^6,
//         x^4*y^3 - z*w^6
//
// Every header is optional except gens. Generators are separated by commas or
// newlines and run until the next header or the end of the file.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/ideal.hpp"
#include "hvec/parse.hpp"

namespace hvec {

struct IdealFile {
  std::optional<std::string> label;
  std::vector<std::string> variables;
  std::optional<std::uint32_t> characteristic;  // as declared in the file
  Ring ring;
  std::vector<Polynomial> forms;
  std::vector<Polynomial> generators;

  Ideal ideal() const { return Ideal(ring, generators); }
};

namespace detail {

struct Fragment {
  std::string text;
  TextOrigin origin;
};

inline bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

inline std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

// Splits `body` (starting at column `col` of `line`) on `sep`, keeping
// each piece's location.
inline std::vector<Fragment> split_located(std::string_view body, char sep, std::size_t line, std::size_t col) {
  std::vector<Fragment> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != sep) continue;
    std::string_view piece = body.substr(start, i - start);
    std::size_t lead = first_non_space(piece);
    if (lead < piece.size()) {
      std::string_view trimmed = piece.substr(lead);
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
      out.push_back({std::string(trimmed), {line, col + start + lead}});
    } else if (i < body.size()) {
      throw ParseError(line, col + start, std::string("empty entry before '") + sep + "'");
    }
    start = i + 1;
  }
  return out;
}

inline std::optional<std::string_view> header_key(std::string_view line, std::size_t& body_start) {
  static const char* keys[] = {"label", "vars", "char", "forms", "gens"};
  std::size_t p = first_non_space(line);
  for (const char* k : keys) {
    std::string_view key(k);
    if (line.substr(p, key.size()) != key) continue;
    std::size_t q = first_non_space(line, p + key.size());
    if (q < line.size() && line[q] == ':') {
      body_start = q + 1;
      return key;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Parses an ideal file. `characteristic` overrides the file's `char:` line.
inline IdealFile parse_ideal_file(std::string_view text,
                                  std::optional<std::uint32_t> characteristic = std::nullopt) {
  std::optional<std::string> label;
  std::vector<std::string> vars;
  std::optional<std::uint32_t> declared;
  std::vector<detail::Fragment> forms, gens;
  std::set<std::string> seen;
  bool in_gens = false;
  TextOrigin vars_at;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t body_at = 0;
    auto key = detail::header_key(line, body_at);
    if (!key) {
      if (!in_gens) throw ParseError(line_no, detail::first_non_space(line) + 1, "expected a header such as 'gens:'");
      for (auto& f : detail::split_located(line, ',', line_no, 1)) gens.push_back(std::move(f));
      continue;
    }
    std::string k(*key);
    if (!seen.insert(k).second) throw ParseError(line_no, 1, "duplicate '" + k + ":' header");
    in_gens = false;
    std::string_view body = line.substr(body_at);
    std::size_t col = body_at + 1;
    if (k == "label") {
      std::size_t lead = detail::first_non_space(body);
      std::string value(body.substr(lead));
      while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
      if (value.empty()) throw ParseError(line_no, col, "empty label");
      label = value;
    } else if (k == "vars") {
      vars_at = {line_no, col};
      std::set<std::string> distinct;
      for (auto& f : detail::split_located(body, ',', line_no, col)) {
        bool ok = std::isalpha(static_cast<unsigned char>(f.text[0])) &&
                  std::all_of(f.text.begin(), f.text.end(),
                              [](unsigned char c) { return std::isalnum(c) || c == '_'; });
        if (!ok) throw ParseError(f.origin.line, f.origin.column, "invalid variable name '" + f.text + "'");
        if (!distinct.insert(f.text).second)
          throw ParseError(f.origin.line, f.origin.column, "variable '" + f.text + "' declared twice");
        vars.push_back(f.text);
      }
      if (vars.empty()) throw ParseError(line_no, col, "no variables declared");
    } else if (k == "char") {
      std::size_t lead = detail::first_non_space(body);
      std::string value(body.substr(lead));
      while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](unsigned char c) { return std::isdigit(c); }) ||
          value.size() > 10)
        throw ParseError(line_no, col + lead, "characteristic must be a decimal prime");
      std::uint64_t p = std::stoull(value);
      if (p >= (1ULL << 31) || !is_prime(p) || p == 2)
        throw ParseError(line_no, col + lead, "characteristic must be an odd prime below 2^31");
      declared = static_cast<std::uint32_t>(p);
    } else if (k == "forms") {
      forms = detail::split_located(body, ';', line_no, col);
    } else {
      in_gens = true;
      for (auto& f : detail::split_located(body, ',', line_no, col)) gens.push_back(std::move(f));
    }
    if (end == text.size()) break;
  }

  if (!seen.count("gens")) throw ParseError(line_no ? line_no : 1, 1, "missing 'gens:' section");
  if (vars.empty()) vars = default_variable_names(4);
  if (vars.size() > static_cast<std::size_t>(kMaxVariables))
    throw ParseError(vars_at.line, vars_at.column, "at most " + std::to_string(kMaxVariables) + " variables");

  std::uint32_t p = characteristic.value_or(declared.value_or(kDefaultCharacteristic));
  Ring ring(static_cast<int>(vars.size()), FieldSpec(p));
  IdealFile out{label, vars, declared, ring, {}, {}};
  for (const auto& f : forms) {
    Polynomial l = parse_polynomial(f.text, ring, vars, f.origin);
    if (l.homogeneous_degree() != 1)
      throw ParseError(f.origin.line, f.origin.column, "linear form expected");
    out.forms.push_back(std::move(l));
  }
  for (const auto& g : gens) {
    Polynomial poly = parse_polynomial(g.text, ring, vars, g.origin);
    if (poly.is_zero()) throw ParseError(g.origin.line, g.origin.column, "generator is zero");
    if (!poly.is_homogeneous()) throw ParseError(g.origin.line, g.origin.column, "generator is not homogeneous");
    if (poly.is_constant()) throw ParseError(g.origin.line, g.origin.column, "generator is a nonzero constant");
    out.generators.push_back(std::move(poly));
  }
  return out;
}

inline std::string serialize(const IdealFile& file) {
  std::ostringstream os;
  if (file.label) os << "label: " << *file.label << '\n';
  os << "vars: ";
  for (std::size_t i = 0; i < file.variables.size(); ++i) os << (i ? ", " : "") << file.variables[i];
  os << '\n';
  os << "char: " << file.ring.field.characteristic() << '\n';
  if (!file.forms.empty()) {
    os << "forms: ";
    for (std::size_t i = 0; i < file.forms.size(); ++i)
      os << (i ? "; " : "") << file.forms[i].to_string(file.variables);
    os << '\n';
  }
  os << "gens:\n";
  for (std::size_t i = 0; i < file.generators.size(); ++i)
    os << "  " << file.generators[i].to_string(file.variables) << (i + 1 < file.generators.size() ? ",\n" : "\n");
  return os.str();
}

}  // namespace hvec
