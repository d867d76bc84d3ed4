#pragma once

#include <cstdint>

#include "bex/funcspace.hpp"

namespace bex {

// Dense matrix operator between two function spaces (rows = target atoms,
// cols = source atoms).
class MatrixOperator {
public:
  MatrixOperator(Matrix m, FunctionSpace source, FunctionSpace target);

  const Matrix& matrix() const { return m_; }
  const FunctionSpace& source() const { return source_; }
  const FunctionSpace& target() const { return target_; }

private:
  Matrix m_;
  FunctionSpace source_;
  FunctionSpace target_;
};

Vec apply(const MatrixOperator& T, const Vec& f);

// Entrywise modulus. On finite weighted sequence spaces the operator modulus
// is computed entrywise, so this is the least dominant of the domination
// calculus.
MatrixOperator least_dominant(const MatrixOperator& T);

// R dominates T iff R >= 0 and R >= |T| entrywise; additionally
// cross-validated on `sample_checks` random functions e via |Te| <= R|e|.
bool dominates(const MatrixOperator& R, const MatrixOperator& T, int sample_checks = 16,
               std::uint64_t seed = 7);

struct NormEstimate {
  double value = 0.0;
  Vec witness;        // ||T w||_G / ||w||_E reproduces value (within 1e-9)
  bool exact = true;  // extreme-point/spectral computation vs ascent lower bound
};

enum class NormMethod { Auto, Ascent };

struct AscentOptions {
  int starts = 64;
  int max_iters = 400;
  double tol = 1e-10;
  std::uint64_t seed = 0xa5c311;
};

// Sign-vector enumeration cap: 2^24 evaluations keeps one call under ~10 s.
inline constexpr std::size_t kSignEnumCap = 24;

// sup_{||e||_E <= 1} ||Te||_G. Exact for: source L^1 (scaled coordinate
// extreme points), target L^inf (row functionals), source L^inf (sign-vector
// enumeration, atom count capped), L^2 -> L^2 (largest singular value), and
// target L^1 (sign-vector enumeration on the target side). Everything else
// falls back to multistart projected-gradient ascent on the unit sphere,
// reported with exact=false (certified lower bound with witness).
NormEstimate operator_norm(const MatrixOperator& T, NormMethod method = NormMethod::Auto,
                           const AscentOptions& opt = {});

// ||T||_M = inf over dominants = || |T| || since the least dominant exists.
double m_norm(const MatrixOperator& T);

// Adjoint S with pairing_nu(g, Th) = pairing_mu(Sg, h); maps the Kothe dual
// of the target into the Kothe dual of the source. Involutive.
MatrixOperator adjoint(const MatrixOperator& T);

// max over tuples (e_1..e_N) of ||sum |Te_n|||_G / ||sum |e_n|||_E; a lower
// bound for m_norm by the regularity criterion.
double buhvalov_ratio(const MatrixOperator& T, const std::vector<std::vector<Vec>>& tuples);

}  // namespace bex
