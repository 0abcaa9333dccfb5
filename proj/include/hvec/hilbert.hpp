#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hvec/combinatorics.hpp"
#include "hvec/errors.hpp"
#include "hvec/groebner.hpp"
#include "hvec/hvector.hpp"
#include "hvec/ideal.hpp"

namespace hvec {

/// K-polynomial N(t) of a graded quotient of k[x_1..x_n]: its Hilbert series
/// is N(t) / (1 - t)^n.
struct HilbertNumerator {
  int nvars = 0;
  std::vector<std::int64_t> coeffs;  // coeffs[k] multiplies t^k

  /// Coefficients of N(t) / (1 - t)^n up to max_degree.
  std::vector<std::int64_t> series(int max_degree) const {
    std::vector<std::int64_t> h(static_cast<std::size_t>(max_degree + 1), 0);
    for (int i = 0; i <= max_degree; ++i)
      for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= i; ++k)
        if (coeffs[k])
          h[i] += coeffs[k] *
                  binomial<std::int64_t>(i - static_cast<int>(k) + nvars - 1, nvars - 1);
    return h;
  }

  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

namespace detail {

using Poly1 = std::vector<std::int64_t>;

inline void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly1 add(Poly1 a, const Poly1& b, int shift = 0) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
  trim(a);
  return a;
}

inline Poly1 times_one_minus_t_power(const Poly1& a, int d) {
  Poly1 out = a;
  Poly1 neg(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
  return add(out, neg, d);
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline Poly1 numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Poly1 n{1};
    for (const auto& g : gens) n = times_one_minus_t_power(n, g.degree());
    return n;
  }
  // pivot: the variable in the most generators, at its lowest positive exponent
  int pivot = 0, best = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v]) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  int e = 0;
  for (const auto& g : gens)
    if (g[pivot] && (e == 0 || g[pivot] < e)) e = g[pivot];
  Monomial p = Monomial::variable(pivot, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, p));
  return add(numerator(std::move(plus), nvars), numerator(std::move(quotient), nvars), e);
}

}  // namespace detail

/// Exact K-polynomial of R/(M) for monomial generators M.
inline HilbertNumerator monomial_hilbert_numerator(std::span<const Monomial> gens, int nvars) {
  for (const auto& g : gens)
    if (g.last_variable() >= nvars) throw DomainError("monomial uses a variable outside the ring");
  return {nvars, detail::numerator(std::vector<Monomial>(gens.begin(), gens.end()), nvars)};
}

/// Default degree bound: 2 + sum of generator degrees, capped at 64.
inline int default_max_degree(const Ideal& ideal) {
  long sum = 2;
  for (int d : ideal.generator_degrees()) sum += d;
  return static_cast<int>(std::min<long>(sum, 64));
}

/// Turns Hilbert values into an HVector: Artinian when a zero is witnessed
/// (trailing part trimmed), truncated otherwise.
inline HVector to_hvector(std::vector<std::int64_t> values) {
  auto zero = std::find(values.begin(), values.end(), 0);
  if (zero != values.end()) {
    values.erase(zero, values.end());
    return HVector::artinian(std::move(values));
  }
  return HVector::raw(std::move(values));
}

/// Hilbert function of R/(G) from a Groebner basis G, degrees 0..max_degree.
inline HVector hilbert_function(const GroebnerBasis& gb, int max_degree) {
  if (max_degree < 0) throw DomainError("hilbert_function: max_degree must be >= 0");
  auto lms = gb.initial_ideal();
  auto values = monomial_hilbert_numerator(lms, gb.ring.nvars).series(max_degree);
  return to_hvector(std::move(values));
}

inline HVector hilbert_function(const Ideal& ideal, std::optional<int> max_degree = std::nullopt,
                                const GroebnerOptions& options = {}) {
  int bound = max_degree.value_or(default_max_degree(ideal));
  if (bound < 0) throw DomainError("hilbert_function: max_degree must be >= 0");
  GroebnerOptions opts = options;
  opts.max_degree = bound;
  return hilbert_function(buchberger(ideal, opts), bound);
}

/// dim_k I_t = C(n-1+t, n-1) - H(t).
inline std::int64_t graded_piece_dim(const Ideal& ideal, int t, const GroebnerOptions& options = {}) {
  if (t < 0) throw DomainError("graded_piece_dim: degree must be >= 0");
  int n = ideal.nvars();
  HVector h = hilbert_function(ideal, t, options);
  return binomial<std::int64_t>(n - 1 + t, n - 1) - h.at(static_cast<std::size_t>(t));
}

/// The initial ideal contains a pure power of every variable.
inline bool is_artinian(const GroebnerBasis& gb) {
  if (gb.truncated_at) throw DomainError("is_artinian needs a complete Groebner basis");
  std::vector<bool> seen(static_cast<std::size_t>(gb.ring.nvars), false);
  for (const auto& m : gb.initial_ideal()) {
    if (m.is_one()) return true;
    int v = m.last_variable();
    bool pure = m[v] == m.degree();
    if (pure) seen[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline int socle_degree(const HVector& h) {
  if (!h.is_artinian()) throw DomainError("socle_degree requires an Artinian h-vector");
  return *h.socle_degree();
}

/// All monomials of degree d in n variables, in descending order of `ring`.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(ring.nvars), 0);
  // enumerate compositions of d into n parts
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == ring.nvars - 1) {
      e[var] = left;
      out.push_back(Monomial(std::span<const int>(e)));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

/// Monomials of degree d outside the initial ideal of gb (a basis of (R/I)_d).
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int d) {
  auto lms = gb.initial_ideal();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(gb.ring, d))
    if (std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); }))
      out.push_back(m);
  return out;
}

namespace detail {

// Rank over GF(p) of a set of sparse rows given as polynomials.
inline std::size_t rank_of(std::vector<Polynomial> rows) {
  std::vector<Polynomial> echelon;  // distinct leading monomials
  for (auto& r : rows) {
    for (;;) {
      if (r.is_zero()) break;
      auto it = std::find_if(echelon.begin(), echelon.end(), [&](const Polynomial& e) {
        return e.leading_monomial() == r.leading_monomial();
      });
      if (it == echelon.end()) {
        echelon.push_back(r.monic());
        break;
      }
      r.sub_mul_inplace(*it, Monomial{}, r.leading_coeff());
    }
  }
  return echelon.size();
}

}  // namespace detail

/// Rank of multiplication by the form f from (R/I)_d to (R/I)_{d + deg f}.
inline std::size_t multiplication_rank(const GroebnerBasis& gb, const Polynomial& f, int d) {
  std::vector<Polynomial> rows;
  for (const auto& m : standard_monomials(gb, d))
    rows.push_back(normal_form(f.shifted(m), gb));
  return detail::rank_of(std::move(rows));
}

/// H_{R/(I:f)}(j) for 0 <= j <= max_degree, computed as the rank of
/// multiplication by f on R/I; an independent route to colon Hilbert
/// functions that needs no colon ideal.
inline HVector colon_hilbert_by_rank(const GroebnerBasis& gb, const Polynomial& f, int max_degree) {
  auto d = f.homogeneous_degree();
  if (!d) throw DomainError("colon_hilbert_by_rank: f must be a nonzero form");
  if (gb.truncated_at && *gb.truncated_at < max_degree + *d)
    throw DomainError("colon_hilbert_by_rank: Groebner basis truncated too low");
  std::vector<std::int64_t> values;
  for (int j = 0; j <= max_degree; ++j)
    values.push_back(static_cast<std::int64_t>(multiplication_rank(gb, f, j)));
  return to_hvector(std::move(values));
}

}  // namespace hvec
