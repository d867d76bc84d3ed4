#pragma once

#include "bex/duality.hpp"
#include "bex/operator.hpp"

namespace bex {

// T (x) I_Y: applies T to each Y-coordinate column of f.
VectorFunction tensor_extension_apply(const MatrixOperator& T, const FiniteBanachSpace& Y,
                                      const VectorFunction& f);

struct RelationReport {
  double max_residual = 0.0;
  std::size_t worst_probe = 0;
  std::size_t worst_atom = 0;  // target atom with the largest pointwise defect
};

// Checks the defining relation <x, T_Y f> = T <x, f> against a probe set;
// residual is measured in the target norm, the worst atom is tracked for
// witness reporting.
RelationReport verify_extension_relation(const MatrixOperator& T, const VectorFunction& out,
                                         const DualPair& XY, const VectorFunction& f,
                                         const std::vector<Vec>& probes);

// Default probe set: the dual basis of X plus 8 random unit vectors. A
// spanning probe set makes residual zero equivalent to equality.
std::vector<Vec> default_probes(const DualPair& XY, std::uint64_t seed = 0x70726f62);

// max_b ( ||(T_Y f)(b)||_Y - (R (a -> ||f(a)||_Y))_b ) for a dominant R.
double domination_pointwise_check(const MatrixOperator& T, const MatrixOperator& R,
                                  const FiniteBanachSpace& Y, const VectorFunction& f);

struct BasisExtensionResult {
  VectorFunction value;
  Matrix prefix_norms;  // prefix length t (row t-1) x target atom
};

// Truncated basis expansion sum_{n<N} T<b_n^*, f> (x) b_n with the pointwise
// Y-norm of every partial sum recorded.
BasisExtensionResult basis_extension_apply(const MatrixOperator& T, const Basis& B,
                                           const FiniteBanachSpace& Y, const VectorFunction& f,
                                           std::size_t N);

// max over prefixes and atoms of prefix_norm - K*(R ||f||_Y); <= 0 up to
// rounding when R dominates T and K is the basis constant.
double basis_prefix_bound_defect(const BasisExtensionResult& res, const MatrixOperator& R,
                                 double K, const FiniteBanachSpace& Y, const VectorFunction& f);

struct PipelineResult {
  MatrixOperator scalar_adjoint;  // S : G^x -> L^1(mu)
  Matrix t_y_matrix;              // extension recovered as the pairing-adjoint of S_X
  double agreement_defect = 0.0;  // entrywise gap to the direct tensor extension
};

// Adjoint-extension route for T : L^inf(mu) -> G: take S = adjoint(T),
// extend S tensor-wise to X-valued functions, and recover T_Y as the
// pairing-adjoint of S_X. At finite scale this must coincide with the
// direct tensor extension entrywise.
PipelineResult adjoint_extension_pipeline(const MatrixOperator& T, const DualPair& XY);

// Applies the recovered T_Y columnwise.
VectorFunction pipeline_apply(const PipelineResult& P, const FiniteBanachSpace& Y,
                              const VectorFunction& f);

// |sum_b <g(b), (T_Y f)(b)> nu_b - sum_a <(S_X g)(a), f(a)> mu_a| with g
// X-valued over the target atoms and f Y-valued over the source atoms.
double pipeline_duality_residual(const PipelineResult& P, const MatrixOperator& T,
                                 const DualPair& XY, const VectorFunction& f,
                                 const VectorFunction& g);

struct NormBoundCheck {
  double max_ratio = 0.0;
  VectorFunction best_f;
};

// max over random f of ||T_Y f||_{G(Y)} / ||f||_{E(Y)}; bounded by m_norm(T).
NormBoundCheck extension_norm_bound_check(const MatrixOperator& T, const FiniteBanachSpace& Y,
                                          int trials, std::uint64_t seed = 0x657874);

}  // namespace bex
