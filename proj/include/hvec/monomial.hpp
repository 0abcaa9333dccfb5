#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "hvec/errors.hpp"

namespace hvec {

/// Public ideals live in at most this many variables.
inline constexpr int kMaxVariables = 8;
/// Monomial storage; one slot beyond kMaxVariables for the auxiliary
/// elimination variable used by intersections.
inline constexpr int kMonomialSlots = kMaxVariables + 1;

using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMonomialSlots) throw DomainError("too many exponents");
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }
  explicit Monomial(std::span<const int> exps) {
    if (exps.size() > kMonomialSlots) throw DomainError("too many exponents");
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.set(static_cast<std::size_t>(index), power);
    return m;
  }

  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, int e) {
    if (i >= kMonomialSlots) throw DomainError("variable index out of range");
    if (e < 0 || e > 0xFFFF) throw DomainError("exponent out of range");
    degree_ = degree_ - exps_[i] + static_cast<std::uint32_t>(e);
    exps_[i] = static_cast<Exponent>(e);
  }

  /// Highest variable index with a nonzero exponent, or -1.
  int last_variable() const noexcept {
    for (int i = kMonomialSlots - 1; i >= 0; --i)
      if (exps_[i]) return i;
    return -1;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < kMonomialSlots; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMonomialSlots; ++i) {
      int e = a.exps_[i] + b.exps_[i];
      if (e > 0xFFFF) throw DomainError("exponent overflow");
      m.exps_[i] = static_cast<Exponent>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw DomainError("monomial quotient: divisor does not divide");
    Monomial m;
    for (int i = 0; i < kMonomialSlots; ++i)
      m.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (int i = 0; i < kMonomialSlots; ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (int i = 0; i < kMonomialSlots; ++i) {
      m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      m.degree_ += m.exps_[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < kMonomialSlots; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

  /// Reads `x^2*w^2` style text using the given variable names.
  std::string to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < names.size() && i < kMonomialSlots; ++i) {
      if (!exps_[i]) continue;
      if (!out.empty()) out += '*';
      out += names[i];
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::array<Exponent, kMonomialSlots> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded order with x_1 > ... > x_n: degree-reverse-lexicographic by
/// default, graded lexicographic on request. A nonzero `block` turns it into
/// an elimination order: the first `block` variables are compared first,
/// then the remaining ones, each block graded.
struct MonomialOrder {
  enum class Kind : std::uint8_t { degrevlex, deglex };

  Kind kind = Kind::degrevlex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder deglex() { return {Kind::deglex, 0}; }
  static MonomialOrder elimination(int leading_vars) {
    return {Kind::degrevlex, leading_vars};
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b,
                               int nvars) const noexcept {
    if (block > 0) {
      if (auto c = compare_range(a, b, 0, block); c != 0) return c;
      return compare_range(a, b, block, nvars);
    }
    return compare_range(a, b, 0, nvars);
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::strong_ordering compare_range(const Monomial& a, const Monomial& b,
                                     int lo, int hi) const noexcept {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    if (kind == Kind::deglex) {
      for (int i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    } else {
      for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
};

}  // namespace hvec
