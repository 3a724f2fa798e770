#pragma once

#include <string>
#include <vector>

#include "obk/integer_matrix.hpp"

namespace obk {

/// Integer polynomial in one variable t. Coefficients run from degree 0
/// upward; trailing zeros are trimmed so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coefficients);
  static Polynomial constant(Int c) { return Polynomial({c}); }
  static Polynomial monomial(Int c, std::size_t degree);

  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Int coefficient(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  Int leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Int evaluate(Int t) const;

  /// Representative up to units +-t^k: constant term nonzero, lowest
  /// coefficient positive. The zero polynomial stays zero.
  Polynomial normalized() const;

  /// Span between highest and lowest nonzero degree.
  int breadth() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a exactly in Z[t]; throws otherwise.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Equality up to multiplication by +-t^k.
bool equal_up_to_units(const Polynomial& a, const Polynomial& b);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant over Z[t] (fraction-free elimination).
Polynomial determinant(PolyMatrix m);

/// det(t*I - a).
Polynomial characteristic_polynomial(const IntMatrix& a);

/// det(x + t*y) for equally sized square integer matrices.
Polynomial pencil_determinant(const IntMatrix& x, const IntMatrix& y);

}  // namespace obk
