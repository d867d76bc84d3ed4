#include "bex/condexp.hpp"

#include <cmath>
#include <stdexcept>

#include "bex/rng.hpp"

namespace bex {

Matrix cond_exp_matrix(const MeasureSpace& space, const Partition& P) {
  const std::size_t n = space.atoms();
  Matrix M(n, n, 0.0);
  for (std::size_t k = 0; k < P.block_count(); ++k) {
    const double mass = P.block_mass(space, k);
    for (std::size_t a : P.block(k))
      for (std::size_t a2 : P.block(k)) M(a, a2) = space.weight(a2) / mass;
  }
  return M;
}

MatrixOperator cond_exp_operator(const MeasureSpace& space, const Partition& P, double p) {
  FunctionSpace Lp(space, p);
  return MatrixOperator(cond_exp_matrix(space, P), Lp, Lp);
}

VectorFunction cond_exp_vector(const MeasureSpace& space, const Partition& P,
                               const FiniteBanachSpace& Y, const VectorFunction& f) {
  return tensor_extension_apply(cond_exp_operator(space, P, kInfExponent), Y, f);
}

namespace {

// Coarsening used for the tower check: merge consecutive pairs of blocks.
Partition merge_pairs(const Partition& P, const MeasureSpace& space) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < P.block_count(); k += 2) {
    std::vector<std::size_t> merged = P.block(k);
    if (k + 1 < P.block_count()) {
      const auto& next = P.block(k + 1);
      merged.insert(merged.end(), next.begin(), next.end());
    }
    blocks.push_back(std::move(merged));
  }
  return Partition(std::move(blocks), space);
}

}  // namespace

CondexpReport verify_condexp_properties(const MeasureSpace& space, const Partition& P,
                                        const FiniteBanachSpace& Y, const DualPair& XY,
                                        int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_condexp_properties: trials >= 1 required");
  CondexpReport rep;
  const std::size_t n = space.atoms();
  const Matrix E = cond_exp_matrix(space, P);

  for (int t = 0; t < trials; ++t) {
    auto g = trial_stream(seed, static_cast<std::uint64_t>(t));
    VectorFunction f(random_matrix(g, n, Y.dim()));
    VectorFunction ef = cond_exp_vector(space, P, Y, f);

    // (1) averaging identity per block and coordinate
    for (std::size_t k = 0; k < P.block_count(); ++k)
      for (std::size_t i = 0; i < Y.dim(); ++i) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t a : P.block(k)) {
          lhs += space.weight(a) * f(a, i);
          rhs += space.weight(a) * ef(a, i);
        }
        rep.averaging_residual = std::max(rep.averaging_residual, std::abs(lhs - rhs));
      }

    // (2) idempotence
    VectorFunction eef = cond_exp_vector(space, P, Y, ef);
    rep.idempotence_defect =
        std::max(rep.idempotence_defect, eef.values().max_abs_diff(ef.values()));

    // (3) contraction in L^p(Y), p in {1, 2, inf}
    for (double p : {1.0, 2.0, kInfExponent}) {
      FunctionSpace Lp(space, p);
      rep.contraction_slack = std::max(
          rep.contraction_slack, bochner_norm(Lp, Y, ef) - bochner_norm(Lp, Y, f));
    }

    // (4) duality <f, E^inf g> = <E^1 f, g> with f X-valued, g Y-valued
    VectorFunction fx(random_matrix(g, n, XY.X().dim()));
    VectorFunction gy(random_matrix(g, n, Y.dim()));
    VectorFunction eg = cond_exp_vector(space, P, Y, gy);
    FiniteBanachSpace Xsp = XY.X();
    VectorFunction efx = tensor_extension_apply(cond_exp_operator(space, P, 1.0), Xsp, fx);
    const double lhs = bochner_pairing(space, XY, fx, eg);
    const double rhs = bochner_pairing(space, XY, efx, gy);
    rep.duality_residual = std::max(rep.duality_residual, std::abs(lhs - rhs));
  }

  // (5) tower property with an internally built coarsening (auxiliary check)
  Partition coarse = merge_pairs(P, space);
  const Matrix E2 = cond_exp_matrix(space, coarse);
  Matrix prod(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += E2(i, k) * E(k, j);
      prod(i, j) = s;
    }
  rep.tower_defect = prod.max_abs_diff(E2);

  rep.pass = rep.averaging_residual <= 1e-12 && rep.idempotence_defect <= 1e-12 &&
             rep.contraction_slack <= 1e-10 && rep.duality_residual <= 1e-10 &&
             rep.tower_defect <= 1e-12;
  return rep;
}

}  // namespace bex
