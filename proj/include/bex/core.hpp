#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bex {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this project is desk-scale
// (dims <= 24), so no attempt is made at blocking or sparsity.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec apply(const Vec& v) const;             // M v
  Vec apply_transposed(const Vec& v) const;  // M^T v
  Matrix transposed() const;
  Matrix cwise_abs() const;
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  double max_abs_diff(const Matrix& o) const;
  double max_abs() const;

  const std::vector<double>& data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(const Vec& a, const Vec& b);
Vec axpy(double alpha, const Vec& x, const Vec& y);  // alpha*x + y

// Gaussian elimination with partial pivoting; throws on (numerically)
// singular input.
Matrix inverse(const Matrix& m);
std::size_t matrix_rank(Matrix m, double tol = 1e-10);

}  // namespace bex
