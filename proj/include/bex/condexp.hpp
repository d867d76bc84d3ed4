#pragma once

#include <cstdint>

#include "bex/extension.hpp"

namespace bex {

// Block-weighted averaging matrix: M[a,a'] = mu_{a'} / mass(block(a)) when a
// and a' share a block, else 0. Positive, row sums 1, self-adjoint in the
// mu-pairing.
Matrix cond_exp_matrix(const MeasureSpace& space, const Partition& P);

// Same matrix as an operator on L^p(mu).
MatrixOperator cond_exp_operator(const MeasureSpace& space, const Partition& P, double p);

// Vector-valued conditional expectation via the tensor extension.
VectorFunction cond_exp_vector(const MeasureSpace& space, const Partition& P,
                               const FiniteBanachSpace& Y, const VectorFunction& f);

struct CondexpReport {
  double averaging_residual = 0.0;   // per-block per-coordinate mass balance
  double idempotence_defect = 0.0;   // E(Ef) vs Ef entrywise
  double contraction_slack = 0.0;    // max over p in {1,2,inf} of ||Ef|| - ||f||
  double duality_residual = 0.0;     // <f, E^inf g> vs <E^1 f, g>
  double tower_defect = 0.0;         // auxiliary: E_coarse E_fine = E_coarse
  bool tower_is_auxiliary = true;    // standard consequence, not asserted by the source theory
  bool pass = false;
};

// Randomized verification of the projection/contraction/duality properties;
// the coarse partition for the tower check is built internally by merging
// blocks of P.
CondexpReport verify_condexp_properties(const MeasureSpace& space, const Partition& P,
                                        const FiniteBanachSpace& Y, const DualPair& XY,
                                        int trials, std::uint64_t seed = 0x434558);

}  // namespace bex
