#include "bex/duality.hpp"

#include <cmath>
#include <stdexcept>

#include "bex/operator.hpp"
#include "bex/rng.hpp"

namespace bex {

FiniteBanachSpace::FiniteBanachSpace(std::size_t dim, double p) : dim_(dim), p_(p) {
  if (dim == 0) throw std::invalid_argument("FiniteBanachSpace: dim must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("FiniteBanachSpace: exponent must satisfy p >= 1");
}

double y_norm(const FiniteBanachSpace& Y, const Vec& v) {
  if (v.size() != Y.dim()) throw std::invalid_argument("y_norm: dimension mismatch");
  const double p = Y.p();
  if (is_inf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0.0;
  if (p == 1.0) {
    for (double x : v) s += std::abs(x);
    return s;
  }
  if (p == 2.0) {
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

DualPair::DualPair(FiniteBanachSpace X, FiniteBanachSpace Y, Matrix pairing_matrix)
    : x_(X), y_(Y), m_(std::move(pairing_matrix)) {
  if (x_.dim() != y_.dim())
    throw std::invalid_argument("DualPair: dim(X) must equal dim(Y) in the finite model");
  if (m_.rows() != x_.dim() || m_.cols() != y_.dim())
    throw std::invalid_argument("DualPair: pairing matrix shape mismatch");
  if (matrix_rank(m_) != x_.dim())
    throw std::invalid_argument("DualPair: pairing matrix must have full rank");
}

DualPair DualPair::identity_pair(const FiniteBanachSpace& X, const FiniteBanachSpace& Y) {
  return DualPair(X, Y, Matrix::identity(X.dim()));
}

double DualPair::pair(const Vec& x, const Vec& y) const { return dot(x, m_.apply(y)); }

NormingReport is_norming(const DualPair& P, double tol, int samples, std::uint64_t seed) {
  // sup_{x in B_X} <x,y> = ||My||_{p'} (coordinate dual norm), exact; the
  // supremum over the unit sphere is sampled.
  const std::size_t d = P.X().dim();
  const double pdual_x = conjugate_exponent(P.X().p());
  const double pdual_y = conjugate_exponent(P.Y().p());
  FiniteBanachSpace Xd(d, pdual_x), Yd(d, pdual_y);
  const Matrix& M = P.pairing_matrix();
  const Matrix Mt = M.transposed();

  auto defect_y = [&](Vec y) {
    const double ny = y_norm(P.Y(), y);
    if (ny <= 0.0) return 0.0;
    for (auto& v : y) v /= ny;
    return std::abs(1.0 - y_norm(Xd, M.apply(y)));
  };
  auto defect_x = [&](Vec x) {
    const double nx = y_norm(P.X(), x);
    if (nx <= 0.0) return 0.0;
    for (auto& v : x) v /= nx;
    return std::abs(1.0 - y_norm(Yd, Mt.apply(x)));
  };

  NormingReport rep;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0.0);
    e[i] = 1.0;
    rep.max_defect = std::max(rep.max_defect, std::max(defect_y(e), defect_x(e)));
  }
  auto g = trial_stream(seed, 0);
  for (int k = 0; k < samples; ++k) {
    rep.max_defect = std::max(rep.max_defect, defect_y(random_unit_vec(g, d)));
    rep.max_defect = std::max(rep.max_defect, defect_x(random_unit_vec(g, d)));
  }
  rep.norming = rep.max_defect <= tol;
  return rep;
}

void VectorFunction::set(std::size_t a, const Vec& v) {
  if (v.size() != dim()) throw std::invalid_argument("VectorFunction::set: dimension mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) values_(a, i) = v[i];
}

VectorFunction VectorFunction::tensor(const Vec& e, const Vec& y) {
  Matrix m(e.size(), y.size());
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t i = 0; i < y.size(); ++i) m(a, i) = e[a] * y[i];
  return VectorFunction(std::move(m));
}

double bochner_norm(const FunctionSpace& E, const FiniteBanachSpace& Y, const VectorFunction& f) {
  if (f.atoms() != E.atoms() || f.dim() != Y.dim())
    throw std::invalid_argument("bochner_norm: shape mismatch");
  Vec pointwise(f.atoms());
  for (std::size_t a = 0; a < f.atoms(); ++a) pointwise[a] = y_norm(Y, f.at(a));
  return norm(E, pointwise);
}

double bochner_pairing(const MeasureSpace& space, const DualPair& XY, const VectorFunction& e,
                       const VectorFunction& f) {
  if (e.atoms() != space.atoms() || f.atoms() != space.atoms() || e.dim() != XY.X().dim() ||
      f.dim() != XY.Y().dim())
    throw std::invalid_argument("bochner_pairing: shape mismatch");
  double s = 0.0;
  for (std::size_t a = 0; a < space.atoms(); ++a)
    s += XY.pair(e.at(a), f.at(a)) * space.weight(a);
  return s;
}

Basis standard_basis(std::size_t dim) {
  return Basis{Matrix::identity(dim), Matrix::identity(dim), 1.0};
}

Basis make_basis(const Matrix& vectors, const FiniteBanachSpace& Y) {
  if (vectors.rows() != Y.dim() || vectors.cols() != Y.dim())
    throw std::invalid_argument("make_basis: basis matrix must be dim x dim");
  Basis b;
  b.vectors = vectors;
  b.functionals = inverse(vectors).transposed();  // rows biorthogonal to rows of `vectors`
  // Basis constant: max norm of the prefix projections y |-> sum_{n<N} <b_n^*,y> b_n
  // on (Y, l^p), computed with the exact engine over a counting measure space.
  const std::size_t d = Y.dim();
  FunctionSpace coord(MeasureSpace(Vec(d, 1.0)), Y.p());
  double K = 0.0;
  for (std::size_t N = 1; N <= d; ++N) {
    Matrix P(d, d, 0.0);
    for (std::size_t n = 0; n < N; ++n)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) P(i, j) += b.vectors(n, i) * b.functionals(n, j);
    K = std::max(K, operator_norm(MatrixOperator(P, coord, coord)).value);
  }
  b.constant = std::max(K, 1.0);
  return b;
}

}  // namespace bex
