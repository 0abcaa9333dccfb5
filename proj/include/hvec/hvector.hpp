#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hvec/errors.hpp"

namespace hvec {

/// Dimensions of the graded pieces of a quotient, indexed from degree 0.
///
/// An Artinian vector is stored up to its socle degree (trailing zeros are
/// trimmed) and reads as 0 beyond it. A non-Artinian vector is either a raw
/// integer sequence (e.g. a first difference) or a Hilbert function that was
/// truncated at a computation bound; reading past its end is an error.
class HVector {
 public:
  HVector() = default;

  /// Arbitrary integer sequence; no Artinian claim.
  static HVector raw(std::vector<std::int64_t> values) {
    HVector h;
    h.values_ = std::move(values);
    return h;
  }

  /// Complete vector of an Artinian quotient. Trailing zeros are trimmed; the
  /// last remaining entry becomes the socle.
  static HVector artinian(std::vector<std::int64_t> values) {
    while (!values.empty() && values.back() == 0) values.pop_back();
    if (values.empty())
      throw DomainError("Artinian h-vector must have a nonzero entry");
    for (auto v : values)
      if (v < 0) throw DomainError("h-vector entries must be non-negative");
    HVector h;
    h.values_ = std::move(values);
    h.artinian_ = true;
    return h;
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::span<const std::int64_t> span() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool is_artinian() const noexcept { return artinian_; }

  std::optional<int> socle_degree() const noexcept {
    if (!artinian_) return std::nullopt;
    return static_cast<int>(values_.size()) - 1;
  }

  /// Entry at degree i; 0 past the socle of an Artinian vector.
  std::int64_t at(std::size_t i) const {
    if (i < values_.size()) return values_[i];
    if (artinian_) return 0;
    throw DomainError("degree " + std::to_string(i) +
                      " lies beyond a truncated h-vector");
  }

  std::int64_t operator[](std::size_t i) const { return values_[i]; }

  /// Entry at degree i, or 0 for negative i (shifted vectors start at 0).
  std::int64_t shifted_at(std::int64_t i) const {
    return i < 0 ? 0 : at(static_cast<std::size_t>(i));
  }

  /// Largest degree this vector knows about (socle, or truncation bound).
  std::size_t known_degree() const noexcept {
    return values_.empty() ? 0 : values_.size() - 1;
  }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<std::int64_t> values_;
  bool artinian_ = false;
};

}  // namespace hvec
