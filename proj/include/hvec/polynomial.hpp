#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/field.hpp"
#include "hvec/monomial.hpp"

namespace hvec {

/// Ambient data shared by every polynomial of one ring: variable count,
/// coefficient field and monomial order.
struct Ring {
  int nvars = 4;
  FieldSpec field{};
  MonomialOrder order{};

  Ring() = default;
  Ring(int n, FieldSpec f = FieldSpec{}, MonomialOrder o = MonomialOrder{})
      : nvars(n), field(f), order(o) {
    if (n < 1 || n > kMonomialSlots)
      throw DomainError("variable count must be in 1.." +
                        std::to_string(kMonomialSlots) + ", got " + std::to_string(n));
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    return order.compare(a, b, nvars);
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Monomial monomial;
  Scalar coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  /// Builds from arbitrary terms; sorts, combines duplicates, drops zeros.
  Polynomial(Ring ring, std::vector<Term> terms) : ring_(ring), terms_(std::move(terms)) {
    normalize();
  }

  static Polynomial constant(Ring ring, std::int64_t c) {
    return Polynomial(ring, {Term{Monomial{}, ring.field.reduce(c)}});
  }
  static Polynomial monomial(Ring ring, const Monomial& m, std::int64_t c = 1) {
    return Polynomial(ring, {Term{m, ring.field.reduce(c)}});
  }
  static Polynomial variable(Ring ring, int index) {
    if (index < 0 || index >= ring.nvars) throw DomainError("variable index out of range");
    return monomial(ring, Monomial::variable(index));
  }

  const Ring& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_.field; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  const Term& leading_term() const {
    require_nonzero("leading_term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  Scalar leading_coeff() const { return leading_term().coeff; }

  /// Maximum total degree; -1 for zero.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  bool is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    int d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.monomial.degree() == d; });
  }

  /// Degree of a nonzero homogeneous polynomial.
  std::optional<int> homogeneous_degree() const noexcept {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().monomial.degree();
  }

  /// Coefficient of m, 0 when absent.
  Scalar coeff(const Monomial& m) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [this](const Term& t, const Monomial& key) {
                                 return ring_.greater(t.monomial, key);
                               });
    return (it != terms_.end() && it->monomial == m) ? it->coeff : 0;
  }

  /// Largest index of a variable occurring in some term, or -1.
  int last_variable() const noexcept {
    int v = -1;
    for (const auto& t : terms_) v = std::max(v, t.monomial.last_variable());
    return v;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = ring_.field.neg(t.coeff);
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, 1);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, a.ring_.field.characteristic() - 1);
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  Polynomial scaled(Scalar c) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = ring_.field.mul(t.coeff, c);
    return out;
  }

  /// c * m * this; order is preserved because monomial orders are
  /// multiplicative.
  Polynomial shifted(const Monomial& m, Scalar c = 1) const {
    Polynomial out(ring_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      out.terms_.push_back({t.monomial * m, ring_.field.mul(t.coeff, c)});
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Polynomial acc(a.ring_);
    for (const auto& t : small.terms_)
      acc.sub_mul_inplace(large, t.monomial, a.ring_.field.neg(t.coeff));
    return acc;
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// this -= c * m * g, the elementary reduction step.
  void sub_mul_inplace(const Polynomial& g, const Monomial& m, Scalar c) {
    require_same_ring(*this, g);
    if (c == 0 || g.is_zero()) return;
    const auto& F = ring_.field;
    Scalar neg_c = F.neg(c);
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    for (const auto& gt : g.terms_) {
      Monomial gm = gt.monomial * m;
      while (it != terms_.end() && ring_.greater(it->monomial, gm)) out.push_back(*it++);
      Scalar gc = F.mul(gt.coeff, neg_c);
      if (it != terms_.end() && it->monomial == gm) {
        Scalar s = F.add(it->coeff, gc);
        if (s) out.push_back({gm, s});
        ++it;
      } else {
        out.push_back({gm, gc});
      }
    }
    out.insert(out.end(), it, terms_.end());
    terms_ = std::move(out);
  }

  /// Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_.field.inv(leading_coeff()));
  }

  /// Same polynomial viewed in another ring with the same field (variables
  /// beyond the target count must not occur).
  Polynomial in_ring(const Ring& target) const {
    if (!(target.field == ring_.field)) throw DomainError("in_ring: field mismatch");
    if (last_variable() >= target.nvars)
      throw DomainError("in_ring: polynomial uses variables outside the target ring");
    return Polynomial(target, terms_);
  }

  std::string to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::int64_t c = ring_.field.lift(t.coeff);
      if (first) {
        if (c < 0) out += '-';
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::int64_t a = c < 0 ? -c : c;
      if (t.monomial.is_one()) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a) + '*';
        out += t.monomial.to_string(names);
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  static void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_))
      throw DomainError("polynomials live in different rings");
  }

  void require_nonzero(const char* what) const {
    if (terms_.empty()) throw DomainError(std::string(what) + " of the zero polynomial");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, Scalar factor) {
    Polynomial out = a;
    // sub_mul with -factor adds factor * b
    out.sub_mul_inplace(b, Monomial{}, a.ring_.field.neg(factor));
    return out;
  }

  void normalize() {
    const auto& F = ring_.field;
    for (auto& t : terms_) {
      if (t.monomial.last_variable() >= ring_.nvars)
        throw DomainError("term uses a variable outside the ring");
      t.coeff %= F.characteristic();
    }
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
      return ring_.greater(x.monomial, y.monomial);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial)
        out.back().coeff = F.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
      if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  Ring ring_{};
  std::vector<Term> terms_;
};

inline Polynomial pow(const Polynomial& f, int e) {
  if (e < 0) throw DomainError("negative exponent");
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace hvec
