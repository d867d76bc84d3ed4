#pragma once

#include <limits>

#include "bex/measure.hpp"

namespace bex {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

inline bool is_inf(double p) { return p == kInfExponent; }

// Conjugate exponent: 1/p + 1/p' = 1, with the convention 1 <-> inf.
double conjugate_exponent(double p);

// Weighted L^p over a finite measure space, 1 <= p <= inf. The L^infty norm
// ignores the weights (correct here: strictly positive weights mean no null
// sets).
class FunctionSpace {
public:
  FunctionSpace(MeasureSpace space, double p);

  const MeasureSpace& space() const { return space_; }
  double p() const { return p_; }
  std::size_t atoms() const { return space_.atoms(); }

private:
  MeasureSpace space_;
  double p_;
};

double norm(const FunctionSpace& E, const Vec& f);

// L^p -> L^{p'} over the same weights; involutive on [1, inf].
FunctionSpace kothe_dual(const FunctionSpace& E);

// Integral pairing sum_a e_a f_a mu_a.
double pairing(const MeasureSpace& space, const Vec& e, const Vec& f);

// sup{ |pairing(e,f)| : ||e||_E <= 1 }, computed through the operator-norm
// engine on the rank-one functional e |-> pairing(e,f). Defined in
// operator.cpp; must agree with norm(kothe_dual(E), f).
double dual_norm_numeric(const FunctionSpace& E, const Vec& f);

}  // namespace bex
