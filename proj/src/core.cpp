#include "bex/core.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bex {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  Vec out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    const double* p = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) s += p[c] * v[c];
    out[r] = s;
  }
  return out;
}

Vec Matrix::apply_transposed(const Vec& v) const {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::apply_transposed: size mismatch");
  Vec out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* p = data_.data() + r * cols_;
    const double vr = v[r];
    for (std::size_t c = 0; c < cols_; ++c) out[c] += p[c] * vr;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::cwise_abs() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = std::abs(x);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec axpy(double alpha, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + y[i];
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < 1e-13) throw std::invalid_argument("inverse: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const double d = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t matrix_rank(Matrix a, double tol) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= tol) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(piv, c), a(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double f = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace bex
