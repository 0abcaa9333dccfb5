#pragma once

// Macaulay-style combinatorics of Hilbert functions: binomial expansions,
// the growth bound h^<i>, Green's restriction bound h_<i>, and the sequence
// predicates (O-sequence, unimodal, symmetric, SI).

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hvec/errors.hpp"
#include "hvec/hvector.hpp"

namespace hvec {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
      throw DomainError("binomial overflows a fixed-width integer; use the "
                        "arbitrary-precision instantiation");
    return out;
  } else {
    return a * b;
  }
}

template <class Int>
long double to_long_double(const Int& v) {
  if constexpr (std::is_integral_v<Int>)
    return static_cast<long double>(v);
  else
    return v.template convert_to<long double>();
}

}  // namespace detail

/// C(n, k), with C(n, k) = 0 whenever n < k or k < 0.
template <class Int = Integer>
Int binomial(const std::type_identity_t<Int>& n, std::int64_t k) {
  if (k < 0 || n < Int(k)) return Int(0);
  Int nn = n;
  if (Int(2 * k) > nn) k = static_cast<std::int64_t>(nn - Int(k));
  Int result = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    // result = C(n - k + t, t), exact at every step
    result = detail::checked_mul<Int>(result, nn - Int(k) + Int(t));
    result /= Int(t);
  }
  return result;
}

/// Greedy representation h = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1.
template <class Int = Integer>
struct BinomialExpansion {
  struct Term {
    Int top;
    int bottom;
    friend bool operator==(const Term&, const Term&) = default;
  };

  int degree = 0;
  std::vector<Term> terms;

  Int value() const {
    Int sum = 0;
    for (const auto& t : terms) sum += binomial<Int>(t.top, t.bottom);
    return sum;
  }

  friend bool operator==(const BinomialExpansion&,
                         const BinomialExpansion&) = default;
};

namespace detail {

// Largest n >= k with C(n, k) <= r (r >= 1, k >= 1); returns n and C(n, k).
template <class Int>
std::pair<Int, Int> largest_top(const Int& r, int k) {
  if (k == 1) return {r, r};
  // (n-k+1)^k / k! <= C(n,k) <= n^k / k!, so with x = (r k!)^(1/k) the answer
  // lies in (x - 1, x + k - 1].
  long double log_kfact = std::lgamma(static_cast<long double>(k) + 1.0L);
  long double x =
      std::exp((std::log(to_long_double(r)) + log_kfact) / static_cast<long double>(k));
  long double guess = std::floor(x + (k - 1) / 2.0L);
  Int n;
  if (!(guess >= k))
    n = Int(k);
  else if (guess < 9.0e18L)
    n = Int(static_cast<std::int64_t>(guess));
  else if constexpr (std::is_integral_v<Int>)
    n = Int(k);
  else
    n = Int(static_cast<double>(guess));
  Int c = binomial<Int>(n, k);
  while (c > r) {
    // C(n-1, k) = C(n, k) (n - k) / n
    c = checked_mul<Int>(c, n - Int(k)) / n;
    n -= 1;
  }
  for (;;) {
    Int next = checked_mul<Int>(c, n + 1) / (n + 1 - Int(k));
    if (next > r) break;
    c = next;
    n += 1;
  }
  return {n, c};
}

inline void require_positive_degree(std::int64_t i, const char* what) {
  if (i <= 0)
    throw DomainError(std::string(what) + ": degree must be positive, got " +
                      std::to_string(i));
}

}  // namespace detail

/// Unique i-binomial expansion of h (h >= 1, i >= 1).
template <class Int = Integer>
BinomialExpansion<Int> binomial_expansion(const std::type_identity_t<Int>& h,
                                          int i) {
  if (h <= Int(0))
    throw DomainError("binomial_expansion: h must be positive");
  detail::require_positive_degree(i, "binomial_expansion");
  BinomialExpansion<Int> out;
  out.degree = i;
  Int rest = h;
  for (int j = i; j >= 1 && rest > Int(0); --j) {
    auto [top, value] = detail::largest_top<Int>(rest, j);
    out.terms.push_back({top, j});
    rest -= value;
  }
  return out;
}

/// Macaulay's growth bound h^<i>; 0 maps to 0.
template <class Int = Integer>
Int growth_bound(const std::type_identity_t<Int>& h, int i) {
  detail::require_positive_degree(i, "growth_bound");
  if (h < Int(0)) throw DomainError("growth_bound: h must be non-negative");
  if (h == Int(0)) return Int(0);
  Int sum = 0;
  for (const auto& t : binomial_expansion<Int>(h, i).terms)
    sum += binomial<Int>(t.top + 1, t.bottom + 1);
  return sum;
}

/// Green's restriction bound h_<i>; 0 maps to 0 and C(a, b) = 0 for a < b.
template <class Int = Integer>
Int green_bound(const std::type_identity_t<Int>& h, int i) {
  detail::require_positive_degree(i, "green_bound");
  if (h < Int(0)) throw DomainError("green_bound: h must be non-negative");
  if (h == Int(0)) return Int(0);
  Int sum = 0;
  for (const auto& t : binomial_expansion<Int>(h, i).terms)
    sum += binomial<Int>(t.top - 1, t.bottom);
  return sum;
}

/// Convenience overloads for dimension values.
inline std::int64_t growth_bound_i64(std::int64_t h, int i) {
  return growth_bound<Integer>(Integer(h), i).convert_to<std::int64_t>();
}
inline std::int64_t green_bound_i64(std::int64_t h, int i) {
  return green_bound<Integer>(Integer(h), i).convert_to<std::int64_t>();
}

/// Raw first difference: entry 0 kept, entry i replaced by h_i - h_{i-1}.
inline HVector first_difference(std::span<const std::int64_t> h) {
  std::vector<std::int64_t> out(h.begin(), h.end());
  for (std::size_t i = h.size(); i-- > 1;) out[i] = h[i] - h[i - 1];
  return HVector::raw(std::move(out));
}
inline HVector first_difference(const HVector& h) {
  return first_difference(h.span());
}

/// Inverse of first_difference.
inline HVector prefix_sum(std::span<const std::int64_t> d) {
  std::vector<std::int64_t> out(d.begin(), d.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] += out[i - 1];
  return HVector::raw(std::move(out));
}

/// Outcome of a sequence predicate; `index` names the first offending degree.
struct Verdict {
  bool ok = true;
  std::optional<std::size_t> index;

  static Verdict pass() { return {}; }
  static Verdict fail(std::size_t at) { return {false, at}; }
  explicit operator bool() const noexcept { return ok; }
};

/// h_0 = 1, entries non-negative, and h_{i+1} <= h_i^<i> for i >= 1.
inline Verdict is_o_sequence(std::span<const std::int64_t> h) {
  if (h.empty()) return Verdict::fail(0);
  if (h[0] != 1) return Verdict::fail(0);
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] < 0) return Verdict::fail(i);
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] == 0) {
      if (h[i + 1] != 0) return Verdict::fail(i + 1);
      continue;
    }
    if (h[i + 1] > growth_bound_i64(h[i], static_cast<int>(i)))
      return Verdict::fail(i + 1);
  }
  return Verdict::pass();
}
inline Verdict is_o_sequence(const HVector& h) { return is_o_sequence(h.span()); }

/// No strict increase after the first strict decrease. On failure, `index` is
/// the degree where that first decrease starts.
inline Verdict is_unimodal(std::span<const std::int64_t> h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  std::size_t first_drop = i;
  for (std::size_t j = i; j + 1 < h.size(); ++j)
    if (h[j] < h[j + 1]) return Verdict::fail(first_drop);
  return Verdict::pass();
}
inline Verdict is_unimodal(const HVector& h) { return is_unimodal(h.span()); }

inline void require_artinian(const HVector& h, const char* what) {
  if (!h.is_artinian())
    throw DomainError(std::string(what) + " requires a complete Artinian h-vector");
}

/// h_i = h_{e-i} for every 0 <= i <= e.
inline bool is_symmetric(const HVector& h) {
  require_artinian(h, "is_symmetric");
  const auto& v = h.values();
  for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
    if (v[i] != v[j]) return false;
  return true;
}

/// Symmetric, and the first difference up to degree floor(e/2) is an
/// O-sequence. A non-symmetric input fails at index 0.
inline Verdict is_si_sequence(const HVector& h) {
  require_artinian(h, "is_si_sequence");
  if (!is_symmetric(h)) return Verdict::fail(0);
  std::size_t half = static_cast<std::size_t>(*h.socle_degree() / 2);
  auto diff = first_difference(h.span().first(half + 1));
  return is_o_sequence(diff.span());
}

/// Degrees i >= 1 with h_i > 0 and h_{i+1} = h_i^<i>.
inline std::vector<int> maximal_growth_degrees(std::span<const std::int64_t> h) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i] > 0 && h[i + 1] == growth_bound_i64(h[i], static_cast<int>(i)))
      out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace hvec
