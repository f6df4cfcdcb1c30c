#include "logcap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "logcap/errors.hpp"

namespace logcap {

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw std::invalid_argument("Matrix: expected n*n entries");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("Matrix::multiply: size mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

std::vector<double> solve_dense(Matrix m, std::vector<double> rhs) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("solve_dense: empty system");
  if (rhs.size() != n) throw std::invalid_argument("solve_dense: rhs size mismatch");
  const double floor = 1e-13 * m.max_abs();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (!(std::abs(m(piv, col)) > floor)) throw SingularMatrixError("solve_dense: matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

double poly_eval(const Polynomial& c, double t) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
  return v;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Polynomial poly_from_roots(std::span<const double> roots) {
  Polynomial p{1.0};
  for (double r : roots) p = poly_mul(p, Polynomial{-r, 1.0});
  return p;
}

}  // namespace logcap
