#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/polynomial.hpp"

namespace hvec {

/// Homogeneous ideal given by generators. An empty generator list is the zero
/// ideal; every listed generator is a nonzero form of degree >= 1.
class Ideal {
 public:
  explicit Ideal(Ring ring) : ring_(ring) { check_ring(); }

  Ideal(Ring ring, std::vector<Polynomial> generators)
      : ring_(ring), generators_(std::move(generators)) {
    check_ring();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& g = generators_[i];
      if (!(g.ring() == ring_))
        throw DomainError("generator " + std::to_string(i + 1) + " lives in another ring");
      if (g.is_zero())
        throw DomainError("generator " + std::to_string(i + 1) + " is zero");
      auto d = g.homogeneous_degree();
      if (!d) throw DomainError("generator " + std::to_string(i + 1) + " is not homogeneous");
      if (*d < 1)
        throw DomainError("generator " + std::to_string(i + 1) + " is a nonzero constant");
    }
  }

  const Ring& ring() const noexcept { return ring_; }
  int nvars() const noexcept { return ring_.nvars; }
  const FieldSpec& field() const noexcept { return ring_.field; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Degrees of the listed generators, ascending.
  std::vector<int> generator_degrees() const {
    std::vector<int> d;
    for (const auto& g : generators_) d.push_back(*g.homogeneous_degree());
    std::sort(d.begin(), d.end());
    return d;
  }

  /// Smallest generator degree; throws for the zero ideal.
  int initial_degree() const {
    if (generators_.empty()) throw DomainError("the zero ideal has no initial degree");
    return generator_degrees().front();
  }

  Ideal with(const Polynomial& extra) const {
    auto gens = generators_;
    gens.push_back(extra);
    return Ideal(ring_, std::move(gens));
  }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  void check_ring() const {
    if (ring_.nvars > kMaxVariables)
      throw DomainError("ideals support at most " + std::to_string(kMaxVariables) +
                        " variables");
  }

  Ring ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace hvec
