#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hvec/errors.hpp"
#include "hvec/polynomial.hpp"

namespace hvec {

/// Square matrix over GF(p), row-major.
class Matrix {
 public:
  Matrix(int n, FieldSpec field) : n_(n), field_(field), a_(static_cast<std::size_t>(n * n), 0) {}

  static Matrix identity(int n, FieldSpec field) {
    Matrix m(n, field);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return field_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  Scalar operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  /// Inverse, or nullopt when singular.
  std::optional<Matrix> inverse() const {
    const auto& F = field_;
    Matrix work = *this;
    Matrix inv = identity(n_, F);
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int r = col; r < n_; ++r)
        if (work(r, col)) {
          pivot = r;
          break;
        }
      if (pivot < 0) return std::nullopt;
      for (int c = 0; c < n_; ++c) {
        std::swap(work(col, c), work(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
      Scalar s = F.inv(work(col, col));
      for (int c = 0; c < n_; ++c) {
        work(col, c) = F.mul(work(col, c), s);
        inv(col, c) = F.mul(inv(col, c), s);
      }
      for (int r = 0; r < n_; ++r) {
        if (r == col || !work(r, col)) continue;
        Scalar factor = work(r, col);
        for (int c = 0; c < n_; ++c) {
          work(r, c) = F.sub(work(r, c), F.mul(factor, work(col, c)));
          inv(r, c) = F.sub(inv(r, c), F.mul(factor, inv(col, c)));
        }
      }
    }
    return inv;
  }

  bool is_invertible() const { return inverse().has_value(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

/// Replaces each variable x_j of f by images[j] (linear forms, possibly in a
/// different ring over the same field).
inline Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& images,
                                    const Ring& target) {
  if (images.size() != static_cast<std::size_t>(f.ring().nvars))
    throw DomainError("substitute_linear: need one image per variable");
  if (!(target.field == f.field())) throw DomainError("substitute_linear: field mismatch");
  int max_power = 0;
  for (const auto& t : f.terms())
    for (int j = 0; j < f.ring().nvars; ++j) max_power = std::max(max_power, t.monomial[j]);
  // powers[j][e] = images[j]^e
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!(images[j].ring() == target)) throw DomainError("substitute_linear: image ring mismatch");
    powers[j].push_back(Polynomial::constant(target, 1));
  }
  auto power = [&](std::size_t j, int e) -> const Polynomial& {
    while (static_cast<int>(powers[j].size()) <= e)
      powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][static_cast<std::size_t>(e)];
  };
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t j = 0; j < images.size(); ++j)
      if (int e = t.monomial[j]) prod = prod * power(j, e);
    out += prod;
  }
  return out;
}

/// Linear forms sum_i M(j, i) x_i, one per row j.
inline std::vector<Polynomial> rows_as_forms(const Matrix& m, const Ring& ring) {
  std::vector<Polynomial> forms;
  for (int j = 0; j < m.size(); ++j) {
    std::vector<Term> terms;
    for (int i = 0; i < m.size(); ++i)
      if (m(j, i)) terms.push_back({Monomial::variable(i), m(j, i)});
    forms.emplace_back(ring, std::move(terms));
  }
  return forms;
}

/// Substitutes x_j -> sum_i M(j, i) x_i. M must be invertible.
inline Polynomial linear_change_of_variables(const Polynomial& f, const Matrix& m) {
  if (m.size() != f.ring().nvars)
    throw DomainError("linear_change_of_variables: matrix size does not match the ring");
  if (!(m.field() == f.field()))
    throw DomainError("linear_change_of_variables: field mismatch");
  if (!m.is_invertible()) throw DomainError("linear_change_of_variables: singular matrix");
  return substitute_linear(f, rows_as_forms(m, f.ring()), f.ring());
}

}  // namespace hvec
