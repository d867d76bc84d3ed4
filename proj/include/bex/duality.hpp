#pragma once

#include <cstdint>

#include "bex/funcspace.hpp"

namespace bex {

// Finite-dimensional coordinate space with an l^p norm in a declared basis.
class FiniteBanachSpace {
public:
  FiniteBanachSpace(std::size_t dim, double p);

  std::size_t dim() const { return dim_; }
  double p() const { return p_; }

private:
  std::size_t dim_;
  double p_;
};

double y_norm(const FiniteBanachSpace& Y, const Vec& v);

// Dual pair <X,Y> with pairing <x,y> = x^T M y in coordinates. The pairing
// matrix must have full rank so both induced maps are injective.
class DualPair {
public:
  DualPair(FiniteBanachSpace X, FiniteBanachSpace Y, Matrix pairing_matrix);
  static DualPair identity_pair(const FiniteBanachSpace& X, const FiniteBanachSpace& Y);

  const FiniteBanachSpace& X() const { return x_; }
  const FiniteBanachSpace& Y() const { return y_; }
  const Matrix& pairing_matrix() const { return m_; }

  double pair(const Vec& x, const Vec& y) const;

private:
  FiniteBanachSpace x_, y_;
  Matrix m_;
};

struct NormingReport {
  double max_defect = 0.0;
  bool norming = false;
};

// Estimates how far the pairing is from recovering both norms as suprema
// over the partner's unit ball. The inner supremum is exact (dual l^p norm);
// the outer one is sampled, so this is a diagnostic report.
NormingReport is_norming(const DualPair& P, double tol, int samples = 4096,
                         std::uint64_t seed = 0x6e6f726d);

// Y-valued function on the atoms: row a holds the coordinates of f(a).
class VectorFunction {
public:
  VectorFunction() = default;
  explicit VectorFunction(Matrix values) : values_(std::move(values)) {}
  VectorFunction(std::size_t atoms, std::size_t dim) : values_(atoms, dim) {}

  std::size_t atoms() const { return values_.rows(); }
  std::size_t dim() const { return values_.cols(); }
  double& operator()(std::size_t a, std::size_t i) { return values_(a, i); }
  double operator()(std::size_t a, std::size_t i) const { return values_(a, i); }
  Vec at(std::size_t a) const { return values_.row(a); }
  void set(std::size_t a, const Vec& v);
  Matrix& values() { return values_; }
  const Matrix& values() const { return values_; }

  // Elementary tensor e (x) y: row a = e_a * y.
  static VectorFunction tensor(const Vec& e, const Vec& y);

private:
  Matrix values_;
};

// Kothe-Bochner norm || a |-> ||f(a)||_Y ||_E.
double bochner_norm(const FunctionSpace& E, const FiniteBanachSpace& Y, const VectorFunction& f);

// sum_a <e(a), f(a)>_{XY} mu_a with e X-valued and f Y-valued.
double bochner_pairing(const MeasureSpace& space, const DualPair& XY, const VectorFunction& e,
                       const VectorFunction& f);

// Finite basis of Y with biorthogonal functionals; row n of `vectors` is b_n,
// row n of `functionals` is b_n^* (coordinate dot-product pairing).
struct Basis {
  Matrix vectors;
  Matrix functionals;
  double constant = 1.0;  // basis constant K >= 1
};

Basis standard_basis(std::size_t dim);

// Builds the biorthogonal system from invertible `vectors` and computes the
// basis constant exactly as the max prefix-projection norm on (Y, l^p).
Basis make_basis(const Matrix& vectors, const FiniteBanachSpace& Y);

}  // namespace bex
