#include "obk/polynomial.hpp"

#include <sstream>
#include <utility>

#include "obk/error.hpp"

namespace obk {

Polynomial::Polynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(Int c, std::size_t degree) {
  std::vector<Int> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Polynomial::evaluate(Int t) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  std::size_t low = 0;
  while (coeffs_[low] == 0) ++low;
  std::vector<Int> v(coeffs_.begin() + static_cast<std::ptrdiff_t>(low), coeffs_.end());
  if (v.front() < 0)
    for (Int& c : v) c = -c;
  return Polynomial(std::move(v));
}

int Polynomial::breadth() const { return normalized().degree(); }

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? " " : "") << coeffs_[i];
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Int> v(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coefficient(i), b.coefficient(i));
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Int> v = a.coefficients();
  for (Int& c : v) c = checked_sub(0, c);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Int> v(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] = checked_add(v[i + j], checked_mul(x[i], y[j]));
  return Polynomial(std::move(v));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DimensionMismatch, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::DimensionMismatch, "inexact polynomial division");
  std::vector<Int> rem = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<Int> q(rem.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int top = rem[k + db];
    if (top % d.back() != 0) throw Error(ErrorKind::DimensionMismatch, "inexact polynomial division");
    q[k] = top / d.back();
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = checked_sub(rem[k + j], checked_mul(q[k], d[j]));
  }
  for (Int c : rem)
    if (c != 0) throw Error(ErrorKind::DimensionMismatch, "inexact polynomial division");
  return Polynomial(std::move(q));
}

bool equal_up_to_units(const Polynomial& a, const Polynomial& b) { return a.normalized() == b.normalized(); }

Polynomial determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return Polynomial::constant(1);
  int sign = 1;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign == 1 ? prev : -prev;
}

Polynomial pencil_determinant(const IntMatrix& x, const IntMatrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorKind::DimensionMismatch, "pencil_determinant");
  const std::size_t n = x.rows();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Polynomial({x(i, j), y(i, j)});
  return determinant(std::move(m));
}

Polynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  return pencil_determinant(-a, IntMatrix::identity(a.rows()));
}

}  // namespace obk
