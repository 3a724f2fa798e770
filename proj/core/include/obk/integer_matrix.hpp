#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace obk {

using Int = std::int64_t;

// Overflow-checked primitives; throw Error{Overflow} instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Dense row-major integer matrix. All arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Int>& data() const noexcept { return data_; }

  IntMatrix transposed() const;
  Int trace() const;

  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> x);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws NotUnimodular when det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Diagonal of the Smith normal form: d1 | d2 | ... , nonnegative,
/// one entry per min(rows, cols).
std::vector<Int> smith_diagonal(const IntMatrix& m);

/// Integer solution x of a * x = b if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, std::span<const Int> b);

bool is_antisymmetric(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);

}  // namespace obk
