#pragma once

// Analysis toolkit for graded Artinian quotients of k[x_1..x_n]: reduction by
// general linear forms, colon quotients, GCDs of graded pieces, and
// executable versions of the exact-sequence, single-generator, GCD-transfer
// and Green restriction statements used to study unimodality.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hvec/combinatorics.hpp"
#include "hvec/errors.hpp"
#include "hvec/gcd.hpp"
#include "hvec/groebner.hpp"
#include "hvec/hilbert.hpp"
#include "hvec/ideal.hpp"
#include "hvec/linear_change.hpp"
#include "hvec/parse.hpp"

namespace hvec {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// splitmix64 step; derives the validation seed from the primary one.
inline std::uint64_t derive_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Check records

enum class CheckStatus { passed, failed, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

/// One degree of a two-sided comparison.
struct CheckRow {
  int degree = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool ok = true;
};

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string note;
  std::vector<CheckRow> rows;
  std::map<std::string, std::int64_t> values;

  bool passed() const noexcept { return status == CheckStatus::passed; }

  static CheckRecord not_applicable(std::string name, std::string why) {
    CheckRecord r;
    r.name = std::move(name);
    r.status = CheckStatus::not_applicable;
    r.note = std::move(why);
    return r;
  }

  void finish() {
    if (status == CheckStatus::not_applicable) return;
    bool all = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok; });
    if (!all) status = CheckStatus::failed;
  }
};

// ---------------------------------------------------------------------------
// Generator structure

/// Minimal generator degrees with the initial degree a and the gap m to the
/// second smallest minimal degree.
struct GeneratorProfile {
  std::vector<int> degrees;
  std::optional<int> initial_degree_a;
  std::optional<int> second_gap_m;
  int count_in_initial_degree = 0;
};

inline GeneratorProfile generator_profile(const Ideal& ideal, const GroebnerOptions& options = {}) {
  GeneratorProfile p;
  if (ideal.is_zero()) return p;
  p.degrees = minimal_generators(ideal, options).generator_degrees();
  int a = p.degrees.front();
  p.initial_degree_a = a;
  p.count_in_initial_degree =
      static_cast<int>(std::count(p.degrees.begin(), p.degrees.end(), a));
  auto next = std::find_if(p.degrees.begin(), p.degrees.end(), [a](int d) { return d > a; });
  if (p.count_in_initial_degree == 1 && next != p.degrees.end()) p.second_gap_m = *next - a;
  return p;
}

// ---------------------------------------------------------------------------
// Artinian reduction

struct ReductionResult {
  Ideal reduced_ideal;
  HVector f_vector;
  std::vector<Polynomial> forms;
  std::optional<std::uint64_t> seed;
  std::optional<int> initial_degree_a;
  std::optional<int> second_gap_m;
  /// f-vector recomputed with forms from the derived seed agrees.
  bool genericity_confirmed = true;
  std::uint64_t validation_seed = 0;
  /// x_j -> image in the reduced ring; used to transport other forms.
  std::vector<Polynomial> substitution;
};

struct ReductionOptions {
  std::optional<int> max_degree;
  bool validate = true;
  GroebnerOptions groebner{};
};

namespace detail {

inline std::vector<Scalar> linear_coefficients(const Polynomial& l) {
  if (l.homogeneous_degree() != 1) throw DomainError("linear forms must be homogeneous of degree 1");
  std::vector<Scalar> c(static_cast<std::size_t>(l.ring().nvars), 0);
  for (const auto& t : l.terms()) c[static_cast<std::size_t>(t.monomial.last_variable())] = t.coeff;
  return c;
}

inline std::size_t rank_of_rows(const std::vector<std::vector<Scalar>>& rows, const FieldSpec& F) {
  auto m = rows;
  std::size_t rank = 0;
  std::size_t ncols = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Scalar inv = F.inv(m[rank][col]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Scalar f = F.mul(m[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c) m[r][c] = F.sub(m[r][c], F.mul(f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

// Uniform scalars from a seeded mt19937_64; the raw engine output keeps the
// draws identical across standard libraries.
inline std::vector<Polynomial> random_linear_forms(const Ring& ring, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& F = ring.field;
  for (;;) {
    std::vector<std::vector<Scalar>> rows;
    for (int k = 0; k < count; ++k) {
      std::vector<Scalar> row;
      for (int i = 0; i < ring.nvars; ++i) row.push_back(static_cast<Scalar>(rng() % F.characteristic()));
      rows.push_back(std::move(row));
    }
    if (rank_of_rows(rows, F) != static_cast<std::size_t>(count)) continue;
    std::vector<Polynomial> forms;
    for (const auto& row : rows) {
      std::vector<Term> terms;
      for (int i = 0; i < ring.nvars; ++i)
        if (row[static_cast<std::size_t>(i)]) terms.push_back({Monomial::variable(i), row[static_cast<std::size_t>(i)]});
      forms.emplace_back(ring, std::move(terms));
    }
    return forms;
  }
}

// Images of x_j in k[y_1..y_{n-k}] after a coordinate change sending the
// forms to the last k coordinates and setting those to zero.
inline std::vector<Polynomial> reduction_substitution(const Ring& ring, const std::vector<Polynomial>& forms) {
  const int n = ring.nvars;
  const int k = static_cast<int>(forms.size());
  if (k < 1 || k >= n) throw DomainError("reduction needs between 1 and n-1 linear forms");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& l : forms) {
    if (!(l.ring() == ring)) throw DomainError("linear form lives in another ring");
    rows.push_back(linear_coefficients(l));
  }
  if (rank_of_rows(rows, ring.field) != static_cast<std::size_t>(k))
    throw DomainError("linear forms are linearly dependent");
  // complete with unit vectors to a basis; unit rows first, forms last
  std::vector<std::vector<Scalar>> basis;
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n - k; ++i) {
    std::vector<Scalar> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    auto trial = basis;
    trial.push_back(e);
    trial.insert(trial.end(), rows.begin(), rows.end());
    if (rank_of_rows(trial, ring.field) == trial.size()) basis.push_back(e);
  }
  basis.insert(basis.end(), rows.begin(), rows.end());
  Matrix L(n, ring.field);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) L(r, c) = basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  Matrix inv = *L.inverse();
  Ring target(n - k, ring.field, ring.order);
  std::vector<Polynomial> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int i = 0; i < n - k; ++i)
      if (inv(j, i)) terms.push_back({Monomial::variable(i), inv(j, i)});
    images.emplace_back(target, std::move(terms));
  }
  return images;
}

inline Ideal substitute_ideal(const Ideal& ideal, const std::vector<Polynomial>& images) {
  const Ring& target = images.front().ring();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial s = substitute_linear(g, images, target);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return Ideal(target, std::move(gens));
}

inline HVector reduced_f_vector(const Ideal& ideal, const std::vector<Polynomial>& forms, int max_degree,
                                const GroebnerOptions& options) {
  auto images = reduction_substitution(ideal.ring(), forms);
  return hilbert_function(substitute_ideal(ideal, images), max_degree, options);
}

}  // namespace detail

/// Quotient by `count` linear forms (given, or drawn from `seed`), realized by
/// a coordinate change that sends the forms to the last variables, which are
/// then set to zero.
inline ReductionResult artinian_reduction(const Ideal& ideal, const std::vector<Polynomial>& forms,
                                          std::uint64_t seed, int count,
                                          const ReductionOptions& options = {}) {
  if (count < 1 || count >= ideal.nvars())
    throw DomainError("artinian_reduction: count must be between 1 and n-1");
  bool drawn = forms.empty();
  std::vector<Polynomial> used;
  if (drawn) {
    used = detail::random_linear_forms(ideal.ring(), count, seed);
  } else {
    if (static_cast<int>(forms.size()) < count)
      throw DomainError("artinian_reduction: fewer linear forms than requested");
    used.assign(forms.begin(), forms.begin() + count);
  }
  int bound = options.max_degree.value_or(default_max_degree(ideal));
  auto images = detail::reduction_substitution(ideal.ring(), used);
  Ideal reduced = detail::substitute_ideal(ideal, images);
  HVector f = hilbert_function(reduced, bound, options.groebner);
  auto profile = generator_profile(ideal, options.groebner);

  ReductionResult r{std::move(reduced), f, used, std::nullopt, profile.initial_degree_a,
                    profile.second_gap_m, true, derive_seed(seed), std::move(images)};
  if (drawn) r.seed = seed;
  if (options.validate) {
    auto other = detail::random_linear_forms(ideal.ring(), count, r.validation_seed);
    r.genericity_confirmed = detail::reduced_f_vector(ideal, other, bound, options.groebner) == f;
  }
  return r;
}

inline ReductionResult artinian_reduction(const Ideal& ideal, std::uint64_t seed, int count,
                                          const ReductionOptions& options = {}) {
  return artinian_reduction(ideal, {}, seed, count, options);
}

// ---------------------------------------------------------------------------
// Colon by a form

struct ColonResult {
  std::optional<Ideal> quotient_ideal;  // empty when f ∈ I (unit ideal)
  bool unit = false;
  HVector h_vector;
  int shift_d = 0;
  /// b_i = H_{R/(I:f)}(i-1); present when f is linear.
  std::optional<std::vector<std::int64_t>> b_vector;
  /// Socle degree e - d expected for the quotient when R/I is Artinian.
  std::optional<int> expected_socle;
  std::optional<bool> socle_matches;
  std::optional<bool> symmetric;
};

inline ColonResult colon_by_form(const Ideal& ideal, const Polynomial& f,
                                 std::optional<int> max_degree = std::nullopt,
                                 const GroebnerOptions& options = {}) {
  if (f.is_zero()) throw DomainError("colon_by_form: f must be nonzero");
  auto d = f.homogeneous_degree();
  if (!d) throw DomainError("colon_by_form: f must be homogeneous");
  ColonResult out;
  out.shift_d = *d;
  int bound = max_degree.value_or(default_max_degree(ideal));
  ColonIdeal q = colon(ideal, f, options);
  if (q.unit()) {
    out.unit = true;
    out.h_vector = HVector::raw({});
    return out;
  }
  out.quotient_ideal = *q.ideal;
  out.h_vector = hilbert_function(*q.ideal, bound, options);
  if (*d == 1) {
    std::vector<std::int64_t> b{0};
    for (std::size_t i = 0; i < out.h_vector.size(); ++i) b.push_back(out.h_vector[i]);
    out.b_vector = std::move(b);
  }
  HVector base = hilbert_function(ideal, bound, options);
  if (base.is_artinian()) {
    out.expected_socle = *base.socle_degree() - *d;
    out.socle_matches = out.h_vector.is_artinian() && out.h_vector.socle_degree() == out.expected_socle;
    if (out.h_vector.is_artinian()) out.symmetric = is_symmetric(out.h_vector);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GCD of a graded piece

struct GcdFinding {
  int degree_t = 0;
  std::optional<Polynomial> gcd_poly;  // empty for a unit GCD
  int gcd_degree = 0;
  std::vector<std::string> triggers;

  bool is_unit() const noexcept { return !gcd_poly.has_value(); }
};

/// GCD of I_t, computed as the GCD of the generators of degree <= t.
inline GcdFinding graded_gcd(const Ideal& ideal, int t) {
  if (ideal.is_zero()) throw DomainError("graded_gcd: the zero ideal has no GCD");
  if (t < ideal.initial_degree())
    throw DomainError("graded_gcd: degree " + std::to_string(t) + " is below the initial degree " +
                      std::to_string(ideal.initial_degree()));
  std::vector<Polynomial> upto;
  for (const auto& g : ideal.generators())
    if (g.degree() <= t) upto.push_back(g);
  Polynomial g = polynomial_gcd(upto);
  GcdFinding out;
  out.degree_t = t;
  if (!g.is_constant()) {
    out.gcd_degree = g.degree();
    out.gcd_poly = std::move(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma checks

/// For D = GCD(I_t) of degree d > 0 and B = R/(I : D):
///   H_B(i - d) = H_A(i) - [C(i+n-1, n-1) - C(i-d+n-1, n-1)]  for i <= t,
/// plus the transfer of non-decrease (and of strict increase) from B in
/// degrees <= t - d to A in degrees <= t.
inline CheckRecord check_exact_sequence_identity(const Ideal& ideal, int t,
                                                 const GroebnerOptions& options = {}) {
  GcdFinding g = graded_gcd(ideal, t);
  if (g.is_unit())
    throw PreconditionError("gcd_nonunit", "check_exact_sequence_identity: I_" + std::to_string(t) +
                                               " has a unit GCD");
  const int n = ideal.nvars();
  const int d = g.gcd_degree;
  int bound = std::max(t, default_max_degree(ideal));
  HVector A = hilbert_function(ideal, bound, options);
  ColonResult B = colon_by_form(ideal, *g.gcd_poly, bound, options);

  CheckRecord rec;
  rec.name = "exact_sequence_identity";
  rec.values["t"] = t;
  rec.values["d"] = d;
  rec.values["dim_A1"] = A.at(1);
  auto hb = [&](int j) -> std::int64_t { return B.unit ? (j == 0 ? 0 : 0) : B.h_vector.shifted_at(j); };
  for (int i = 0; i <= t; ++i) {
    std::int64_t bracket = binomial<std::int64_t>(i + n - 1, n - 1) - binomial<std::int64_t>(i - d + n - 1, n - 1);
    std::int64_t lhs = hb(i - d);
    std::int64_t rhs = A.at(static_cast<std::size_t>(i)) - bracket;
    rec.rows.push_back({i, lhs, rhs, lhs == rhs});
  }
  auto nondecreasing = [](auto&& at, int upto, bool strict) {
    for (int i = 0; i < upto; ++i)
      if (strict ? at(i + 1) <= at(i) : at(i + 1) < at(i)) return false;
    return true;
  };
  auto a_at = [&](int i) { return A.at(static_cast<std::size_t>(i)); };
  for (bool strict : {false, true}) {
    bool antecedent = nondecreasing(hb, t - d, strict);
    bool consequent = nondecreasing(a_at, t, strict);
    std::string key = strict ? "increasing" : "nondecreasing";
    rec.values[key + "_B"] = antecedent;
    rec.values[key + "_A"] = consequent;
    rec.rows.push_back({-1, antecedent, consequent, !antecedent || consequent});
  }
  if (A.at(1) < 2) rec.note = "dim A_1 < 2: outside the identity's hypotheses";
  rec.finish();
  return rec;
}

/// Exactly one minimal generator in the initial degree a, the next minimal
/// generator in degree a + m: the two-form reduction f satisfies
/// f_{a-1} = ... = f_{a+m-1} = a, f_{a+m} <= a - 1, and f is non-increasing
/// from degree a - 1 on.
inline CheckRecord check_single_generator_pattern(const Ideal& ideal, const ReductionResult& reduction,
                                                  const GroebnerOptions& options = {}) {
  auto profile = generator_profile(ideal, options);
  if (!profile.initial_degree_a)
    throw PreconditionError("nonzero_ideal", "check_single_generator_pattern: zero ideal");
  if (profile.count_in_initial_degree != 1)
    throw PreconditionError("single_initial_generator",
                            "check_single_generator_pattern: " +
                                std::to_string(profile.count_in_initial_degree) +
                                " minimal generators in the initial degree");
  const int a = *profile.initial_degree_a;
  const HVector& f = reduction.f_vector;
  CheckRecord rec;
  rec.name = "single_generator_pattern";
  rec.values["a"] = a;
  auto known = static_cast<int>(f.known_degree());
  auto f_at = [&](int j) { return f.at(static_cast<std::size_t>(j)); };
  int plateau_end = profile.second_gap_m ? a + *profile.second_gap_m - 1
                                         : (f.is_artinian() ? a - 1 : known);
  if (profile.second_gap_m) {
    rec.values["m"] = *profile.second_gap_m;
  } else {
    rec.note = "no second minimal generator: drop clause skipped";
  }
  for (int j = std::max(a - 1, 0); j <= plateau_end && (j <= known || f.is_artinian()); ++j)
    rec.rows.push_back({j, f_at(j), a, f_at(j) == a});
  if (profile.second_gap_m) {
    int j = a + *profile.second_gap_m;
    if (j <= known || f.is_artinian()) rec.rows.push_back({j, f_at(j), a - 1, f_at(j) <= a - 1});
  }
  int limit = f.is_artinian() ? known + 1 : known;
  for (int j = std::max(a - 1, 0); j < limit; ++j)
    rec.rows.push_back({-(j + 1), f_at(j + 1), f_at(j), f_at(j + 1) <= f_at(j)});
  rec.finish();
  return rec;
}

/// J = (f, g, h) with deg h = deg g + 1, D = GCD(f, g) of degree d where
/// deg f - 2 <= d < deg f, and h ∉ (D): after reduction by two general linear
/// forms, J and (J, D) have equal Hilbert functions from degree deg h on.
struct GcdTransferResult {
  CheckRecord record;
  HVector j_table;
  HVector jd_table;
  Polynomial gcd;
};

inline GcdTransferResult check_gcd_transfer(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                                            std::uint64_t seed,
                                            const std::vector<Polynomial>& forms = {},
                                            std::optional<int> max_degree = std::nullopt,
                                            const GroebnerOptions& options = {}) {
  for (const auto* p : {&f, &g, &h})
    if (p->is_zero() || !p->is_homogeneous())
      throw PreconditionError("homogeneous", "check_gcd_transfer: inputs must be nonzero forms");
  const int df = f.degree(), dg = g.degree(), dh = h.degree();
  if (dh != dg + 1)
    throw PreconditionError("deg_h_eq_deg_g_plus_1", "check_gcd_transfer: deg h = " + std::to_string(dh) +
                                                         " but deg g + 1 = " + std::to_string(dg + 1));
  Polynomial D = polynomial_gcd(f, g);
  const int d = D.degree();
  if (!(df - 2 <= d && d < df))
    throw PreconditionError("gcd_degree_range", "check_gcd_transfer: gcd degree " + std::to_string(d) +
                                                    " outside [deg f - 2, deg f)");
  if (d == 0) throw PreconditionError("gcd_degree_range", "check_gcd_transfer: unit gcd");
  Ideal D_ideal(f.ring(), {D});
  if (ideal_membership(h, D_ideal, options))
    throw PreconditionError("h_not_in_D", "check_gcd_transfer: h lies in (D)");

  Ideal J(f.ring(), {f, g, h});
  Ideal JD = J.with(D);
  int bound = max_degree.value_or(default_max_degree(J));
  std::vector<Polynomial> used =
      forms.empty() ? detail::random_linear_forms(f.ring(), 2, seed)
                    : std::vector<Polynomial>(forms.begin(), forms.begin() + 2);
  HVector lhs = detail::reduced_f_vector(J, used, bound, options);
  HVector rhs = detail::reduced_f_vector(JD, used, bound, options);

  CheckRecord rec;
  rec.name = "gcd_transfer";
  rec.values["deg_f"] = df;
  rec.values["deg_g"] = dg;
  rec.values["deg_h"] = dh;
  rec.values["d"] = d;
  for (int j = dh; j <= bound; ++j) {
    std::int64_t a = lhs.at(static_cast<std::size_t>(j)), b = rhs.at(static_cast<std::size_t>(j));
    rec.rows.push_back({j, a, b, a == b});
  }
  rec.finish();
  return {std::move(rec), lhs, rhs, D};
}

/// Green: for a general linear form l, h_{A/lA}(i) <= (h_A(i))_<i>.
inline CheckRecord check_green_bound(const Ideal& ideal, const ReductionResult& reduction,
                                     const GroebnerOptions& options = {}) {
  if (reduction.forms.size() != 1)
    throw PreconditionError("one_form", "check_green_bound: reduction must use exactly one form");
  const HVector& restricted = reduction.f_vector;
  int bound = static_cast<int>(restricted.known_degree());
  HVector A = hilbert_function(ideal, std::max(bound, 1), options);
  CheckRecord rec;
  rec.name = "green_bound";
  std::int64_t equalities = 0;
  int top = std::min<int>(bound, static_cast<int>(A.known_degree()));
  if (A.is_artinian()) top = bound;
  for (int i = 1; i <= top; ++i) {
    std::int64_t lhs = restricted.at(static_cast<std::size_t>(i));
    std::int64_t rhs = green_bound_i64(A.at(static_cast<std::size_t>(i)), i);
    rec.rows.push_back({i, lhs, rhs, lhs <= rhs});
    if (lhs == rhs && lhs > 0) {
      ++equalities;
      rec.values["equality_at_" + std::to_string(i)] = 1;
    }
  }
  rec.values["equality_count"] = equalities;
  rec.finish();
  return rec;
}

/// h_i = f_i + b_i + c_i with b_i = H_{R/(I:l1)}(i-1) and
/// c_i = H_{R/((I,l1):l2)}(i-1), all three computed independently.
struct BookkeepingResult {
  CheckRecord record;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
};

inline BookkeepingResult check_reduction_bookkeeping(const Ideal& ideal, const std::vector<Polynomial>& forms,
                                                     int max_degree, const GroebnerOptions& options = {}) {
  if (forms.size() < 2) throw PreconditionError("two_forms", "bookkeeping needs two linear forms");
  const auto& l1 = forms[0];
  const auto& l2 = forms[1];
  HVector h = hilbert_function(ideal, max_degree, options);
  HVector f = detail::reduced_f_vector(ideal, {l1, l2}, max_degree, options);
  ColonResult colon1 = colon_by_form(ideal, l1, max_degree, options);

  auto images = detail::reduction_substitution(ideal.ring(), {l1});
  Ideal cut = detail::substitute_ideal(ideal, images);
  Polynomial l2_image = substitute_linear(l2, images, images.front().ring());
  HVector c_vec = HVector::raw({});
  if (cut.is_zero()) {
    c_vec = hilbert_function(cut, max_degree, options);
  } else {
    ColonResult colon2 = colon_by_form(cut, l2_image, max_degree, options);
    c_vec = colon2.unit ? HVector::artinian({0, 1}) : colon2.h_vector;
    if (colon2.unit) c_vec = HVector::raw(std::vector<std::int64_t>(static_cast<std::size_t>(max_degree + 1), 0));
  }
  BookkeepingResult out;
  out.record.name = "reduction_bookkeeping";
  for (int i = 0; i <= max_degree; ++i) {
    std::int64_t b = colon1.unit ? 0 : colon1.h_vector.shifted_at(i - 1);
    std::int64_t c = c_vec.shifted_at(i - 1);
    std::int64_t hi = h.at(static_cast<std::size_t>(i));
    std::int64_t fi = f.at(static_cast<std::size_t>(i));
    out.b.push_back(b);
    out.c.push_back(c);
    out.record.rows.push_back({i, hi, fi + b + c, hi == fi + b + c});
  }
  out.record.finish();
  return out;
}

// ---------------------------------------------------------------------------
// Full report

struct Predicates {
  bool o_sequence = false;
  std::optional<bool> symmetric;
  std::optional<bool> unimodal;
  std::optional<bool> si_sequence;
  bool gorenstein_consistent = false;
};

struct ReductionSummary {
  std::vector<Polynomial> forms;
  std::optional<std::uint64_t> seed;
  HVector f_vector;
  std::optional<int> initial_degree_a;
  std::optional<int> second_gap_m;
  std::vector<int> maximal_growth_degrees;
  bool genericity_confirmed = true;
  std::uint64_t validation_seed = 0;
  std::optional<std::string> error;
};

struct AnalysisOptions {
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> max_degree;
  std::vector<Polynomial> forms;  // user-supplied l1, l2
  bool record_timings = false;
  GroebnerOptions groebner{};
};

struct AnalysisReport {
  std::string label;
  std::uint32_t characteristic = 0;
  std::uint64_t seed = 0;
  HVector h_vector;
  std::optional<int> socle_degree;
  Predicates predicates;
  std::vector<int> maximal_growth_degrees;
  std::vector<int> generator_degrees;
  ReductionSummary reduction;
  std::vector<GcdFinding> gcd_findings;
  std::vector<CheckRecord> lemma_checks;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> errors;
};

namespace detail {

class SectionTimer {
 public:
  SectionTimer(AnalysisReport& report, std::string name, bool enabled)
      : report_(report), name_(std::move(name)), enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  ~SectionTimer() {
    if (!enabled_) return;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.timings_ms[name_] = std::chrono::duration<double, std::milli>(elapsed).count();
  }

 private:
  AnalysisReport& report_;
  std::string name_;
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

// Runs a section; resource and domain errors are recorded, not propagated.
template <class Fn>
void guarded(AnalysisReport& report, const std::string& section, Fn&& fn) {
  try {
    fn();
  } catch (const ResourceError& e) {
    report.errors.push_back(section + ": resource: " + e.what());
  } catch (const DomainError& e) {
    report.errors.push_back(section + ": " + e.what());
  }
}

}  // namespace detail

inline AnalysisReport analyze(const Ideal& ideal, const AnalysisOptions& opts = {}, std::string label = "") {
  AnalysisReport report;
  report.label = std::move(label);
  report.characteristic = ideal.field().characteristic();
  report.seed = opts.seed;
  const auto& gopts = opts.groebner;
  const int bound = opts.max_degree.value_or(default_max_degree(ideal));
  bool timings = opts.record_timings;

  bool have_h = false;
  detail::guarded(report, "hilbert", [&] {
    detail::SectionTimer timer(report, "hilbert", timings);
    report.h_vector = hilbert_function(ideal, bound, gopts);
    have_h = true;
  });
  if (!have_h) return report;
  const HVector& h = report.h_vector;
  report.socle_degree = h.socle_degree();
  report.predicates.o_sequence = static_cast<bool>(is_o_sequence(h));
  if (h.is_artinian()) {
    report.predicates.symmetric = is_symmetric(h);
    report.predicates.unimodal = static_cast<bool>(is_unimodal(h));
    report.predicates.si_sequence = static_cast<bool>(is_si_sequence(h));
    report.predicates.gorenstein_consistent = *report.predicates.symmetric;
  }
  report.maximal_growth_degrees = maximal_growth_degrees(h.span());

  GeneratorProfile profile;
  detail::guarded(report, "generators", [&] {
    detail::SectionTimer timer(report, "generators", timings);
    profile = generator_profile(ideal, gopts);
    report.generator_degrees = profile.degrees;
  });

  std::optional<ReductionResult> reduction;
  report.reduction.seed = opts.forms.empty() ? std::optional<std::uint64_t>(opts.seed) : std::nullopt;
  if (ideal.nvars() >= 3) {
    detail::guarded(report, "reduction", [&] {
      detail::SectionTimer timer(report, "reduction", timings);
      ReductionOptions ro{bound, true, gopts};
      reduction = artinian_reduction(ideal, opts.forms, opts.seed, 2, ro);
      auto& s = report.reduction;
      s.forms = reduction->forms;
      s.seed = reduction->seed;
      s.f_vector = reduction->f_vector;
      s.initial_degree_a = reduction->initial_degree_a;
      s.second_gap_m = reduction->second_gap_m;
      s.maximal_growth_degrees = maximal_growth_degrees(reduction->f_vector.span());
      s.genericity_confirmed = reduction->genericity_confirmed;
      s.validation_seed = reduction->validation_seed;
    });
    if (!reduction) report.reduction.error = "reduction failed";
  } else {
    report.reduction.error = "reduction needs at least three variables";
  }

  // GCD search: maximal growth of h, or a repeated value in the reduction.
  if (!ideal.is_zero()) {
    detail::SectionTimer timer(report, "gcd", timings);
    std::map<int, std::vector<std::string>> triggers;
    for (int i : report.maximal_growth_degrees) triggers[i].push_back("h_maximal_growth");
    if (reduction) {
      const auto& f = reduction->f_vector.values();
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] > 0 && f[i] == f[i + 1]) {
          triggers[static_cast<int>(i)].push_back("f_repeat");
          triggers[static_cast<int>(i + 1)].push_back("f_repeat");
        }
    }
    const int a = ideal.initial_degree();
    for (auto& [t, why] : triggers) {
      if (t < a) continue;
      why.erase(std::unique(why.begin(), why.end()), why.end());
      GcdFinding g = graded_gcd(ideal, t);
      g.triggers = why;
      report.gcd_findings.push_back(std::move(g));
    }
  }

  auto& checks = report.lemma_checks;
  auto record_precondition = [&](const std::string& name, auto&& fn) {
    detail::guarded(report, name, [&] {
      detail::SectionTimer timer(report, name, timings);
      try {
        fn();
      } catch (const PreconditionError& e) {
        checks.push_back(CheckRecord::not_applicable(name, e.what()));
      }
    });
  };

  // Green bound with one general form
  if (ideal.nvars() >= 2) {
    record_precondition("green_bound", [&] {
      std::vector<Polynomial> one;
      if (!opts.forms.empty()) one.push_back(opts.forms.front());
      ReductionOptions ro{bound, false, gopts};
      auto r1 = artinian_reduction(ideal, one, opts.seed, 1, ro);
      checks.push_back(check_green_bound(ideal, r1, gopts));
    });
  }

  // exact-sequence identity and colon socle at every non-unit graded GCD
  std::set<std::string> seen_gcds;
  for (const auto& g : report.gcd_findings) {
    if (g.is_unit()) continue;
    record_precondition("exact_sequence_identity", [&] {
      auto rec = check_exact_sequence_identity(ideal, g.degree_t, gopts);
      checks.push_back(std::move(rec));
    });
    auto names = default_variable_names(ideal.nvars());
    std::string key = g.gcd_poly->to_string(names);
    if (!seen_gcds.insert(key).second) continue;
    record_precondition("colon_socle", [&] {
      ColonResult c = colon_by_form(ideal, *g.gcd_poly, bound, gopts);
      CheckRecord rec;
      rec.name = "colon_socle";
      rec.note = "colon by " + key;
      rec.values["d"] = c.shift_d;
      if (c.unit || !c.expected_socle) {
        rec.status = CheckStatus::not_applicable;
        rec.note += c.unit ? ": form lies in the ideal" : ": quotient is not Artinian";
      } else {
        int actual = c.h_vector.socle_degree().value_or(-1);
        rec.rows.push_back({*c.expected_socle, actual, *c.expected_socle, actual == *c.expected_socle});
        rec.values["symmetric"] = c.symmetric.value_or(false);
        rec.rows.push_back({-1, c.symmetric.value_or(false), 1, c.symmetric.value_or(false)});
      }
      rec.finish();
      checks.push_back(std::move(rec));
    });
  }

  if (reduction) {
    record_precondition("single_generator_pattern",
                        [&] { checks.push_back(check_single_generator_pattern(ideal, *reduction, gopts)); });
  }

  // GCD transfer on the first three minimal generators
  record_precondition("gcd_transfer", [&] {
    Ideal mins = minimal_generators(ideal, gopts);
    if (mins.size() < 3)
      throw PreconditionError("three_generators", "fewer than three minimal generators");
    const auto& gens = mins.generators();
    std::vector<Polynomial> forms = reduction ? reduction->forms : std::vector<Polynomial>{};
    auto r = check_gcd_transfer(gens[0], gens[1], gens[2], opts.seed, forms, std::nullopt, gopts);
    checks.push_back(std::move(r.record));
  });

  if (reduction && h.is_artinian()) {
    record_precondition("reduction_bookkeeping", [&] {
      auto b = check_reduction_bookkeeping(ideal, reduction->forms, bound, gopts);
      checks.push_back(std::move(b.record));
    });
  }
  return report;
}

}  // namespace hvec
