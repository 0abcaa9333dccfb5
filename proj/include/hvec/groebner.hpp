#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/gcd.hpp"
#include "hvec/ideal.hpp"
#include "hvec/polynomial.hpp"

namespace hvec {

struct GroebnerOptions {
  std::size_t max_basis_size = 5000;
  std::uint64_t max_reduction_steps = 200'000'000;
  /// Homogeneous input only: skip S-pairs above this degree. The result is
  /// then a Groebner basis up to that degree.
  std::optional<int> max_degree;
};

struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t reduction_steps = 0;
};

/// Reduced, monic Groebner basis, sorted by ascending leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;
  std::optional<int> truncated_at;
  GroebnerStats stats;

  /// Minimal generators of the leading-term ideal.
  std::vector<Monomial> initial_ideal() const {
    std::vector<Monomial> lms;
    for (const auto& g : elements) lms.push_back(g.leading_monomial());
    return lms;
  }

  bool is_unit() const {
    return elements.size() == 1 && elements.front().leading_monomial().is_one();
  }
};

namespace detail {

inline std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMonomialSlots; ++i)
    if (m[i]) mask |= 1u << i;
  return mask;
}

// Leading monomials of reducers with a support mask for quick rejection.
class ReducerIndex {
 public:
  void add(const Polynomial* g) {
    entries_.push_back({g->leading_monomial(), support_mask(g->leading_monomial()), g});
  }
  void clear() { entries_.clear(); }

  const Polynomial* find(const Monomial& m) const {
    std::uint32_t mask = support_mask(m);
    for (const auto& e : entries_)
      if ((e.mask & ~mask) == 0 && e.lm.divides(m)) return e.poly;
    return nullptr;
  }

 private:
  struct Entry {
    Monomial lm;
    std::uint32_t mask;
    const Polynomial* poly;
  };
  std::vector<Entry> entries_;
};

class StepBudget {
 public:
  StepBudget(GroebnerStats& stats, std::uint64_t limit) : stats_(stats), limit_(limit) {}
  void tick() {
    if (++stats_.reduction_steps > limit_)
      throw ResourceError("max_reduction_steps",
                          "Groebner computation exceeded the reduction-step budget of " +
                              std::to_string(limit_));
  }

 private:
  GroebnerStats& stats_;
  std::uint64_t limit_;
};

// Reduces f by the index. Only the leading term is reduced when `full` is
// false; otherwise every term.
inline Polynomial reduce(Polynomial f, const ReducerIndex& index, bool full, StepBudget* budget) {
  const FieldSpec F = f.field();
  std::vector<Term> done;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    if (const Polynomial* g = index.find(lt.monomial)) {
      Monomial q = lt.monomial / g->leading_monomial();
      Scalar c = F.mul(lt.coeff, F.inv(g->leading_coeff()));
      f.sub_mul_inplace(*g, q, c);
      if (budget) budget->tick();
      continue;
    }
    if (!full) break;
    done.push_back(lt);
    // drop the leading term; remaining terms stay sorted
    std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
    f = Polynomial(f.ring(), std::move(rest));
  }
  if (!full) return f;
  for (const auto& t : f.terms()) done.push_back(t);
  return Polynomial(f.ring(), std::move(done));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& F = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.shifted(l / f.leading_monomial(), F.inv(f.leading_coeff()));
  a.sub_mul_inplace(g, l / g.leading_monomial(), F.inv(g.leading_coeff()));
  return a;
}

}  // namespace detail

/// Remainder of f modulo the basis: no term is divisible by a leading
/// monomial of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  detail::ReducerIndex index;
  for (const auto& g : basis)
    if (!g.is_zero()) {
      if (!(g.ring() == f.ring())) throw DomainError("normal_form: ring mismatch");
      index.add(&g);
    }
  return detail::reduce(f, index, true, nullptr);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements);
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  Buchberger(Ring ring, const GroebnerOptions& options)
      : ring_(ring), options_(options), budget_(stats_, options.max_reduction_steps) {}

  GroebnerBasis run(const std::vector<Polynomial>& input) {
    std::vector<std::pair<Polynomial, int>> start;
    for (const auto& f : input) {
      if (!(f.ring() == ring_)) throw DomainError("buchberger: generator ring mismatch");
      if (!f.is_zero()) start.push_back({f.monic(), f.degree()});
    }
    std::sort(start.begin(), start.end(), [this](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return ring_.greater(b.first.leading_monomial(), a.first.leading_monomial());
    });
    for (auto& [f, sugar] : start) {
      if (options_.max_degree && f.is_homogeneous() && f.degree() > *options_.max_degree) {
        truncated_ = true;
        continue;
      }
      Polynomial h = reduce(f, active_index(), false, &budget_);
      if (!h.is_zero()) insert(h.monic(), sugar);
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const auto& a, const auto& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring_.greater(b.lcm, a.lcm);
      });
      CriticalPair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_considered;
      if (options_.max_degree && p.lcm.degree() > *options_.max_degree) {
        truncated_ = true;
        continue;
      }
      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      ++stats_.pairs_reduced;
      Polynomial h = reduce(std::move(s), active_index(), false, &budget_);
      if (!h.is_zero()) insert(h.monic(), p.sugar);
    }
    return finish();
  }

 private:
  const ReducerIndex& active_index() {
    if (index_dirty_) {
      index_.clear();
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (active_[k]) index_.add(&basis_[k]);
      index_dirty_ = false;
    }
    return index_;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h, int sugar) {
    if (basis_.size() + 1 > options_.max_basis_size)
      throw ResourceError("max_basis_size", "Groebner basis exceeded the size budget of " +
                                                std::to_string(options_.max_basis_size));
    const std::size_t hi = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    index_dirty_ = true;
    if (lh.is_one()) {
      // unit ideal: nothing else matters
      for (std::size_t k = 0; k < hi; ++k) active_[k] = false;
      pairs_.clear();
      return;
    }

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) {
        const Monomial& lg = basis_[g].leading_monomial();
        cands.push_back({g, lcm(lh, lg), coprime(lh, lg)});
      }
    // chain criterion among new pairs
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm) &&
            (!(cands[b].lcm == cands[a].lcm) || b < a)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // old pairs made redundant by h
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(basis_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(basis_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;  // product criterion
      const Monomial& lg = basis_[c.g].leading_monomial();
      int s = std::max(sugar + (c.lcm.degree() - lh.degree()),
                       sugar_[c.g] + (c.lcm.degree() - lg.degree()));
      pairs_.push_back({c.g, hi, c.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(basis_[k]);
    // interreduce tails against the other elements
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      ReducerIndex others;
      for (std::size_t o = 0; o < minimal.size(); ++o)
        if (o != k) others.add(&minimal[o]);
      const Term lt = minimal[k].leading_term();
      std::vector<Term> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
      Polynomial t = reduce(Polynomial(ring_, std::move(tail)), others, true, &budget_);
      std::vector<Term> terms{lt};
      terms.insert(terms.end(), t.terms().begin(), t.terms().end());
      reduced.push_back(Polynomial(ring_, std::move(terms)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_.greater(b.leading_monomial(), a.leading_monomial());
    });
    GroebnerBasis gb{ring_, std::move(reduced), std::nullopt, stats_};
    if (truncated_) gb.truncated_at = options_.max_degree;
    return gb;
  }

  Ring ring_;
  GroebnerOptions options_;
  GroebnerStats stats_;
  StepBudget budget_;
  std::vector<Polynomial> basis_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  ReducerIndex index_;
  bool index_dirty_ = true;
  bool truncated_ = false;
};

}  // namespace detail

/// Reduced Groebner basis of the polynomials (any ring, homogeneous or not).
inline GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& polys,
                                const GroebnerOptions& options = {}) {
  return detail::Buchberger(ring, options).run(polys);
}

inline GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& options = {}) {
  return buchberger(ideal.ring(), ideal.generators(), options);
}

/// Every S-polynomial of the basis reduces to zero.
inline bool satisfies_s_pair_criterion(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      const auto& a = gb.elements[i];
      const auto& b = gb.elements[j];
      if (gb.truncated_at &&
          lcm(a.leading_monomial(), b.leading_monomial()).degree() > *gb.truncated_at)
        continue;
      if (!normal_form(detail::s_polynomial(a, b), gb).is_zero()) return false;
    }
  return true;
}

/// No leading monomial divides any term of another element; all monic.
inline bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (gb.elements[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = gb.elements[j].leading_monomial();
      for (const auto& t : gb.elements[i].terms())
        if (lm.divides(t.monomial)) return false;
    }
  }
  return true;
}

inline bool contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal,
                             const GroebnerOptions& options = {}) {
  if (!(f.ring() == ideal.ring())) throw DomainError("ideal_membership: ring mismatch");
  if (f.is_zero()) return true;
  GroebnerOptions opts = options;
  if (f.is_homogeneous()) opts.max_degree = f.degree();
  return contains(buchberger(ideal, opts), f);
}

namespace detail {

// x_i -> x_{i+shift} (shift may be negative); ring changes accordingly.
inline Polynomial shift_variables(const Polynomial& f, const Ring& target, int shift) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring().nvars; ++i)
      if (int e = t.monomial[i]) {
        int to = i + shift;
        if (to < 0 || to >= target.nvars) throw DomainError("shift_variables: out of range");
        m.set(static_cast<std::size_t>(to), e);
      }
    terms.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace detail

/// Generators of I ∩ (f): the t-free part of a Groebner basis of
/// t*I + (1 - t)*(f) under an order eliminating the auxiliary variable t.
inline Ideal intersect_principal(const Ideal& ideal, const Polynomial& f,
                                 const GroebnerOptions& options = {}) {
  if (!(f.ring() == ideal.ring())) throw DomainError("intersect_principal: ring mismatch");
  if (f.is_zero()) throw DomainError("intersect_principal: f must be nonzero");
  if (!f.is_homogeneous()) throw DomainError("intersect_principal: f must be homogeneous");
  const Ring& base = ideal.ring();
  if (ideal.is_zero()) return Ideal(base);
  Ring big(base.nvars + 1, base.field, MonomialOrder::elimination(1));
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * detail::shift_variables(g, big, 1));
  gens.push_back(one_minus_t * detail::shift_variables(f, big, 1));
  GroebnerBasis gb = buchberger(big, gens, GroebnerOptions{options.max_basis_size,
                                                           options.max_reduction_steps, {}});
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(),
                             [](const Term& term) { return term.monomial[0] != 0; });
    if (!has_t) out.push_back(detail::shift_variables(g, base, -1));
  }
  return Ideal(base, std::move(out));
}

/// (I : f). `ideal` is empty exactly when f ∈ I, i.e. the quotient is the
/// unit ideal.
struct ColonIdeal {
  std::optional<Ideal> ideal;
  bool unit() const noexcept { return !ideal.has_value(); }
};

inline ColonIdeal colon(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options = {}) {
  if (!(f.ring() == ideal.ring())) throw DomainError("colon: ring mismatch");
  if (f.is_zero()) throw DomainError("colon: f must be nonzero");
  if (!f.is_homogeneous()) throw DomainError("colon: f must be homogeneous");
  if (f.is_constant()) return {ideal};
  if (ideal_membership(f, ideal, options)) return {std::nullopt};
  Ideal meet = intersect_principal(ideal, f, options);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, f);
    if (!q) throw DomainError("colon: intersection generator not divisible by f");
    gens.push_back(std::move(*q));
  }
  return {Ideal(ideal.ring(), std::move(gens))};
}

/// A minimal generating subset of a homogeneous ideal, in ascending degree.
inline Ideal minimal_generators(const Ideal& ideal, const GroebnerOptions& options = {}) {
  std::vector<Polynomial> sorted = ideal.generators();
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (!kept.empty()) {
      GroebnerOptions opts = options;
      opts.max_degree = g.degree();
      if (contains(buchberger(ideal.ring(), kept, opts), g)) continue;
    }
    kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

}  // namespace hvec
