#pragma once

// Reference computations that share no code with the Groebner or numerator
// paths: dense Gaussian elimination over GF(p) on the spanning set
// { m * g : deg m + deg g = d } of I_d, and divisibility counting for
// monomial ideals.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hvec/hilbert.hpp"

namespace oracle {

using hvec::Monomial;
using hvec::Polynomial;

inline std::int64_t rank_dense(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint32_t>(a * b % p); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return static_cast<std::uint32_t>(r);
  };
  std::int64_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& top = m[static_cast<std::size_t>(rank)];
    std::uint32_t inv = powmod(top[c], p - 2);
    for (auto& v : top) v = mulmod(v, inv);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      std::uint32_t f = m[r][c];
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + p - mulmod(f, top[k])) % p;
    }
    ++rank;
  }
  return rank;
}

/// All exponent vectors of total degree d in n variables.
inline std::vector<Monomial> monomials(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n - 1) {
      e[static_cast<std::size_t>(v)] = left;
      out.push_back(Monomial(std::span<const int>(e)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(v)] = k;
      self(self, v + 1, left - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

/// H_{R/I}(d) for homogeneous generators, by dense linear algebra.
inline std::int64_t hilbert_value(const std::vector<Polynomial>& gens, int n, int d) {
  auto basis = monomials(n, d);
  std::map<std::vector<int>, std::size_t> column;
  auto key = [n](const Monomial& m) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i) k.push_back(m[i]);
    return k;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) column[key(basis[i])] = i;
  std::vector<std::vector<std::uint32_t>> rows;
  std::uint32_t p = gens.empty() ? 65521 : gens.front().field().characteristic();
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& m : monomials(n, d - dg)) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& t : g.terms()) row[column.at(key(t.monomial * m))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size()) - rank_dense(std::move(rows), p);
}

/// Number of degree-d monomials divisible by none of `gens`.
inline std::int64_t standard_count(const std::vector<Monomial>& gens, int n, int d) {
  std::int64_t count = 0;
  for (const auto& m : monomials(n, d)) {
    bool in = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        in = true;
        break;
      }
    if (!in) ++count;
  }
  return count;
}

/// Random monomial ideal: up to `max_gens` generators, degrees 1..max_degree.
inline std::vector<Monomial> random_monomials(std::mt19937_64& rng, int n, int max_gens, int max_degree) {
  int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
  std::vector<Monomial> out;
  for (int k = 0; k < count; ++k) {
    int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < d; ++j) ++e[rng() % static_cast<std::uint64_t>(n)];
    out.push_back(Monomial(std::span<const int>(e)));
  }
  return out;
}

}  // namespace oracle
