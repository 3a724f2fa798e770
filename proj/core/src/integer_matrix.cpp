#include "obk/integer_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "obk/error.hpp"

namespace obk {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = checked_add(a(i, j), b(i, j));
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = checked_sub(a(i, j), b(i, j));
  return r;
}

IntMatrix operator-(const IntMatrix& a) { return IntMatrix(a.rows(), a.cols()) - a; }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
    }
  return r;
}

std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::vector<Int> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = checked_add(y[i], checked_mul(a(i, j), x[j]));
  return y;
}

namespace {

// Fraction-free elimination in place; returns (rank, sign of row permutation,
// last nonzero pivot). For a square full-rank matrix the last pivot is det.
struct Bareiss {
  std::size_t rank = 0;
  int sign = 1;
  Int last_pivot = 1;
};

Bareiss bareiss(IntMatrix& m) {
  Bareiss out;
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
      out.sign = -out.sign;
    }
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        const Int num = checked_sub(checked_mul(m(row, col), m(i, j)), checked_mul(m(i, col), m(row, j)));
        m(i, j) = num / prev;
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  out.rank = row;
  out.last_pivot = prev;
  return out;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  const Bareiss b = bareiss(work);
  if (b.rank < m.rows()) return 0;
  return b.sign * b.last_pivot;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix work = m;
  return bareiss(work).rank;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) throw Error(ErrorKind::NotUnimodular, "determinant " + std::to_string(det));
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
    return inv;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(m)(j, i) = (-1)^(i+j) det(m without row i, column j)
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const Int cof = ((i + j) % 2 ? -1 : 1) * determinant(minor);
      inv(j, i) = checked_mul(cof, det);
    }
  return inv;
}

std::vector<Int> smith_diagonal(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(r1, j), a(r2, j));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, c1), a(i, c2));
  };
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || std::abs(a(i, j)) < std::abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      const Int p = a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = a(i, t) / p;
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = a(t, j) / p;
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: p must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) = checked_add(a(t, j), a(bad_row, j));
    }
  }
done:
  std::vector<Int> diag(n, 0);
  for (std::size_t t = 0; t < n; ++t) diag[t] = std::abs(a(t, t));
  return diag;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, std::span<const Int> b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve_integer");
  const std::size_t r = a.cols();
  if (r == 0) {
    for (Int v : b)
      if (v != 0) return std::nullopt;
    return std::vector<Int>{};
  }
  if (rank(a) != r) throw Error(ErrorKind::DimensionMismatch, "solve_integer needs independent columns");
  // Pick r independent rows greedily, then solve the square system by Cramer.
  std::vector<std::size_t> chosen;
  IntMatrix trial(0, r);
  for (std::size_t i = 0; i < a.rows() && chosen.size() < r; ++i) {
    IntMatrix next(chosen.size() + 1, r);
    for (std::size_t k = 0; k < chosen.size(); ++k)
      for (std::size_t j = 0; j < r; ++j) next(k, j) = a(chosen[k], j);
    for (std::size_t j = 0; j < r; ++j) next(chosen.size(), j) = a(i, j);
    if (rank(next) == chosen.size() + 1) chosen.push_back(i);
  }
  IntMatrix sq(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) sq(k, j) = a(chosen[k], j);
  const Int det = determinant(sq);
  std::vector<Int> x(r);
  for (std::size_t col = 0; col < r; ++col) {
    IntMatrix rep = sq;
    for (std::size_t k = 0; k < r; ++k) rep(k, col) = b[chosen[k]];
    const Int num = determinant(rep);
    if (num % det != 0) return std::nullopt;
    x[col] = num / det;
  }
  const auto check = a * std::span<const Int>(x);
  if (!std::equal(check.begin(), check.end(), b.begin())) return std::nullopt;
  return x;
}

bool is_antisymmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_symmetric(const IntMatrix& m) { return m.is_square() && m == m.transposed(); }

}  // namespace obk
