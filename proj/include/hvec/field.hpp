#pragma once

#include <cstdint>
#include <string>

#include "hvec/errors.hpp"

namespace hvec {

using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 65521;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime field GF(p), standing in for a characteristic-zero field.
/// Scalars are canonical representatives 0..p-1.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p <= 2 || p >= (1ULL << 31) || !is_prime(p))
      throw DomainError("characteristic must be an odd prime below 2^31, got " +
                        std::to_string(p));
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw DomainError("division by zero in GF(p)");
    return pow(a, p_ - 2);
  }
  /// Symmetric representative in (-p/2, p/2], for printing.
  std::int64_t lift(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_ = kDefaultCharacteristic;
};

}  // namespace hvec
