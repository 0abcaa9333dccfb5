#pragma once

// Multivariate GCD over GF(p) by primitive pseudo-remainder sequences.
// A polynomial in x_0..x_v is viewed as univariate in x_v with coefficients
// in x_0..x_{v-1}; contents are taken recursively, variables peeled from the
// last one down.

#include <algorithm>
#include <optional>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/polynomial.hpp"

namespace hvec {

/// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& F = f.field();
  Polynomial rest = f;
  std::vector<Term> quotient;
  Scalar inv_lc = F.inv(g.leading_coeff());
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) return std::nullopt;
    Monomial q = lt.monomial / g.leading_monomial();
    Scalar c = F.mul(lt.coeff, inv_lc);
    quotient.push_back({q, c});
    rest.sub_mul_inplace(g, q, c);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

inline bool divides(const Polynomial& g, const Polynomial& f) {
  return divide_exact(f, g).has_value();
}

namespace detail {

inline int degree_in(const Polynomial& f, int v) {
  int d = -1;
  for (const auto& t : f.terms()) d = std::max(d, t.monomial[v]);
  return d;
}

// c[k] = coefficient of x_v^k, as polynomials free of x_v.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, int v) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(f, v) + 1));
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    int k = m[v];
    m.set(v, 0);
    buckets[k].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b));
  return out;
}

inline Polynomial leading_coeff_in(const Polynomial& f, int v) {
  int d = degree_in(f, v);
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.monomial[v] == d) {
      Monomial m = t.monomial;
      m.set(v, 0);
      terms.push_back({m, t.coeff});
    }
  return Polynomial(f.ring(), std::move(terms));
}

inline Polynomial gcd_upto(const Polynomial& f, const Polynomial& g, int v);

inline Polynomial content_in(const Polynomial& f, int v) {
  Polynomial c(f.ring());
  for (const auto& coeff : coefficients_in(f, v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.monic() : gcd_upto(c, coeff, v - 1);
    if (c.is_constant()) break;
  }
  return c;
}

inline Polynomial primitive_part_in(const Polynomial& f, int v) {
  if (f.is_zero()) return f;
  return *divide_exact(f, content_in(f, v));
}

// Sparse pseudo-remainder of a by b with respect to x_v.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int v) {
  int db = degree_in(b, v);
  Polynomial lb = leading_coeff_in(b, v);
  while (!a.is_zero()) {
    int da = degree_in(a, v);
    if (da < db) break;
    Polynomial la = leading_coeff_in(a, v);
    Polynomial shift = la * Polynomial::monomial(a.ring(), Monomial::variable(v, da - db));
    a = lb * a - shift * b;
  }
  return a;
}

// gcd of the monomial m and the polynomial g
inline Polynomial monomial_gcd(const Monomial& m, const Polynomial& g) {
  Monomial out = m;
  for (const auto& t : g.terms()) out = gcd(out, t.monomial);
  return Polynomial::monomial(g.ring(), out);
}

// gcd of polynomials involving only x_0..x_v; result monic.
inline Polynomial gcd_upto(const Polynomial& f, const Polynomial& g, int v) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.size() == 1) return monomial_gcd(f.leading_monomial(), g);
  if (g.size() == 1) return monomial_gcd(g.leading_monomial(), f);
  while (v >= 0 && degree_in(f, v) <= 0 && degree_in(g, v) <= 0) --v;
  if (v < 0) return Polynomial::constant(f.ring(), 1);

  Polynomial cf = content_in(f, v);
  Polynomial cg = content_in(g, v);
  Polynomial c = gcd_upto(cf, cg, v - 1);

  Polynomial a = *divide_exact(f, cf);
  Polynomial b = *divide_exact(g, cg);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
  while (!b.is_zero()) {
    if (degree_in(b, v) == 0) {
      a = Polynomial::constant(f.ring(), 1);
      break;
    }
    Polynomial r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(a, v)).monic();
}

}  // namespace detail

/// Monic greatest common divisor of two nonzero polynomials.
inline Polynomial polynomial_gcd(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw DomainError("polynomial_gcd: ring mismatch");
  if (f.is_zero() || g.is_zero()) throw DomainError("polynomial_gcd: zero input");
  int v = std::max(f.last_variable(), g.last_variable());
  return detail::gcd_upto(f, g, v);
}

/// Monic gcd of a nonempty list of nonzero polynomials.
inline Polynomial polynomial_gcd(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw DomainError("polynomial_gcd: empty list");
  Polynomial g = fs.front().monic();
  for (std::size_t i = 1; i < fs.size() && !g.is_constant(); ++i)
    g = polynomial_gcd(g, fs[i]);
  if (g.is_zero()) throw DomainError("polynomial_gcd: zero input");
  return g;
}

}  // namespace hvec
