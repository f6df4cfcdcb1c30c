#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace logcap {

/// Row-major dense square matrix.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double max_abs() const noexcept;
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Gaussian elimination with partial pivoting. Throws SingularMatrixError
/// when a pivot falls below 1e-13 * max|M|.
std::vector<double> solve_dense(Matrix m, std::vector<double> rhs);

/// Coefficients in increasing degree: c[0] + c[1] t + ... .
using Polynomial = std::vector<double>;

double poly_eval(const Polynomial& c, double t);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);

/// Monic polynomial with the given roots.
Polynomial poly_from_roots(std::span<const double> roots);

}  // namespace logcap
