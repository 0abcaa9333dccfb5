#pragma once

// The four bundled Gorenstein examples in four variables and the values
// printed for them. Elided middles of printed h-vectors are never filled in:
// a displayed prefix is matched position by position from degree 0, a
// displayed tail from the socle degree down, and the rest is covered by the
// symmetry requirement.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hvec/analysis.hpp"
#include "hvec/combinatorics.hpp"
#include "hvec/hilbert.hpp"
#include "hvec/ideal_file.hpp"

namespace hvec {

struct GcdExpectation {
  int degree_t;
  std::optional<std::string> gcd;  // empty: unit
};

struct CorpusEntry {
  std::string label;
  std::string_view file_text;
  std::vector<std::int64_t> h_prefix;
  std::vector<std::int64_t> h_tail;
  bool expect_si = false;
  std::vector<std::int64_t> f_vector;  // with the file's forms; empty if none printed
  std::vector<GcdExpectation> gcds;
  std::vector<int> f_maximal_growth;  // degrees that must appear
};

/// Socle degree forced by a printed prefix that reaches the middle: a single
/// peak at degree k gives 2k, a doubled peak at k, k+1 gives 2k+1.
inline std::optional<int> symmetric_completion_socle(const std::vector<std::int64_t>& prefix) {
  auto peak = std::max_element(prefix.begin(), prefix.end());
  if (peak == prefix.end() || peak + 1 == prefix.end()) return std::nullopt;
  int k = static_cast<int>(peak - prefix.begin());
  if (*(peak + 1) == *peak) return 2 * k + 1;
  return 2 * k;
}

namespace corpus_text {

inline constexpr std::string_view ex1 = R"(# Gorenstein, socle degree 26, one generator in the initial degree 4
label: ex1
vars: x, y, z, w
forms: 2*x - 5*y + 13*z - 7*w; -11*x - 4*y + 5*z + 9*w
gens:
  x^2*w^2, x^6, x^4*y^3 - z*w^6, w^8, y^9*w^2, z^11, x^2*z^10, y^12*w, y^12*z,
  y^13 - x^3*z^9*w, x^3*y^12, y^9*z^10
)";

inline constexpr std::string_view ex2 = R"(# Gorenstein, socle degree 29
label: ex2
vars: x, y, z, w
forms: x - 3*y + 15*z - 2*w; -13*x - 4*y + 5*z + 8*w
gens:
  y^2*w^2, y^4*w, y^4*z, x*y^4, w^8, x^6*y^2, z^10*w^2, y^2*z^11 - x^7*w^6,
  x^13, x^6*z^10, z^21, y^26 - x^5*z^20*w
)";

inline constexpr std::string_view ex3 = R"(# generated in degrees 5 and higher
label: ex3
vars: x, y, z, w
gens:
  x^2*w^4, x^6, z^3*w^4, x*y^6, z^8, w^9, y^6*z^3, x^5*z^5 - y^5*w^5, y^11
)";

inline constexpr std::string_view ex4 = R"(# generated in degrees 5 and higher
label: ex4
vars: x, y, z, w
gens:
  y^3*w^3, y^5*w, y^5*z, x*y^5, w^9, x^7*y^3, y^2*z^11 - x^7*w^6, z^11*w^3,
  x^14, x^7*z^11, z^22, y^29 - x^6*z^21*w^2
)";

}  // namespace corpus_text

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"ex1",
       corpus_text::ex1,
       {1, 4, 10, 20, 34, 52, 73, 95, 116, 136, 156, 174, 187, 191, 187, 174},
       {52, 34, 20, 10, 4, 1},
       true,
       {1, 2, 3, 4, 4, 4, 3, 1, 0},
       {{6, "x^2"}, {7, std::nullopt}},
       {}},
      {"ex2",
       corpus_text::ex2,
       {1, 4, 10, 20, 34, 49, 66, 85, 104, 121, 137, 153, 168, 179, 184,
        184, 179, 168, 153, 137, 121, 104, 85, 66, 49, 34, 20, 10, 4, 1},
       {},
       false,
       {1, 2, 3, 4, 4, 2, 2, 2, 1},
       {{5, "y^2"}, {6, "y^2"}, {7, "y^2"}},
       {5, 6}},
      {"ex3",
       corpus_text::ex3,
       {1, 4, 10, 20, 35, 55, 79, 104, 127, 137, 143, 149, 143, 137, 127, 104, 79, 55, 35, 20, 10, 4, 1},
       {},
       false,
       {},
       {},
       {}},
      {"ex4",
       corpus_text::ex4,
       {1, 4, 10, 20, 35, 56, 80, 107, 137, 169, 201, 231, 259, 285, 307, 322, 329, 329, 322, 307},
       {56, 35, 20, 10, 4, 1},
       false,
       {},
       {},
       {}},
  };
  return entries;
}

inline const CorpusEntry& corpus_entry(std::string_view label) {
  for (const auto& e : corpus())
    if (e.label == label) return e;
  throw DomainError("unknown corpus label '" + std::string(label) + "'");
}

/// Expected socle degree: the length of a fully printed vector, otherwise the
/// symmetric completion of the printed prefix.
inline int expected_socle(const CorpusEntry& e) {
  if (e.h_tail.empty() && e.h_prefix.back() == 1 && e.h_prefix.size() > 1)
    return static_cast<int>(e.h_prefix.size()) - 1;
  return *symmetric_completion_socle(e.h_prefix);
}

struct CorpusOutcome {
  std::string label;
  HVector h_vector;
  std::optional<HVector> f_vector;
  std::vector<std::string> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

namespace detail {

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

/// Checks every printed value of one entry against the pipeline.
inline CorpusOutcome run_corpus_entry(const CorpusEntry& entry, const GroebnerOptions& options = {}) {
  IdealFile file = parse_ideal_file(entry.file_text);
  Ideal ideal = file.ideal();
  CorpusOutcome out;
  out.label = entry.label;
  auto& bad = out.mismatches;

  const int e = expected_socle(entry);
  HVector h = hilbert_function(ideal, std::max(e + 2, default_max_degree(ideal)), options);
  out.h_vector = h;
  for (std::size_t i = 0; i < entry.h_prefix.size(); ++i)
    if (h.at(i) != entry.h_prefix[i])
      bad.push_back("h_" + std::to_string(i) + " = " + std::to_string(h.at(i)) + ", printed " +
                    std::to_string(entry.h_prefix[i]));
  for (std::size_t k = 0; k < entry.h_tail.size(); ++k) {
    std::size_t i = static_cast<std::size_t>(e) - (entry.h_tail.size() - 1 - k);
    if (h.at(i) != entry.h_tail[k])
      bad.push_back("h_" + std::to_string(i) + " = " + std::to_string(h.at(i)) + ", printed " +
                    std::to_string(entry.h_tail[k]));
  }
  if (!h.is_artinian()) {
    bad.push_back("quotient is not Artinian");
    return out;
  }
  if (*h.socle_degree() != e)
    bad.push_back("socle degree " + std::to_string(*h.socle_degree()) + ", expected " + std::to_string(e));
  if (!is_symmetric(h)) bad.push_back("h-vector is not symmetric");
  if (auto v = is_unimodal(h); !v) bad.push_back("h-vector is not unimodal");
  if (entry.expect_si && !is_si_sequence(h)) bad.push_back("h-vector is not an SI-sequence");

  if (!entry.f_vector.empty()) {
    ReductionOptions ro{static_cast<int>(entry.f_vector.size()) + 4, false, options};
    auto red = artinian_reduction(ideal, file.forms, 0, 2, ro);
    out.f_vector = red.f_vector;
    for (std::size_t i = 0; i < entry.f_vector.size(); ++i)
      if (red.f_vector.at(i) != entry.f_vector[i])
        bad.push_back("f = (" + detail::join(red.f_vector.values()) + "), printed (" +
                      detail::join(entry.f_vector) + ")");
    auto growth = maximal_growth_degrees(red.f_vector.span());
    for (int d : entry.f_maximal_growth)
      if (std::find(growth.begin(), growth.end(), d) == growth.end())
        bad.push_back("no maximal growth of f in degree " + std::to_string(d));
  }
  for (const auto& g : entry.gcds) {
    GcdFinding found = graded_gcd(ideal, g.degree_t);
    std::string got = found.is_unit() ? "1" : found.gcd_poly->to_string(file.variables);
    std::string want = g.gcd.value_or("1");
    if (got != want)
      bad.push_back("gcd of I_" + std::to_string(g.degree_t) + " is " + got + ", expected " + want);
  }
  // drop duplicate f-vector messages
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return out;
}

}  // namespace hvec
