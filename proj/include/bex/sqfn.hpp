#pragma once

#include "bex/operator.hpp"

namespace bex {

// Krivine's upper bound pi / (2 ln(1 + sqrt 2)) for the Grothendieck
// constant; any true-K_G test only needs an upper bound.
inline constexpr double kGrothendieckBound = 1.782214;

// || a -> (sum_k e_k(a)^2)^{1/2} ||_E
double square_function(const FunctionSpace& E, const std::vector<Vec>& es);

// square_function(G, (S e_k)) / ( ||S|| * square_function(E, es) );
// bounded by the Grothendieck constant for every pair of lattices.
double krivine_ratio(const MatrixOperator& S, const std::vector<Vec>& es);

// ||gamma||_p for a standard Gaussian: sqrt(2) * (Gamma((p+1)/2)/sqrt(pi))^{1/p},
// via log-gamma, cross-checked against quadrature within 1e-10 (cached per p).
double gaussian_moment(double p);

// Quadrature route (independent of the closed form): Gauss-Legendre on a
// dyadic mesh; Gauss-Hermite is exact for even integer p but converges too
// slowly for the kink of |x|^p at 0 otherwise.
double gaussian_moment_quadrature(double p);

// Marcinkiewicz-Zygmund constant max{ ||gamma||_{p1} / ||gamma||_{p2}, 1 }.
double mz_constant(double p1, double p2);

struct MzCheck {
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Square-function inequality check for S : L^{p1} -> L^{p2} (unweighted):
// sq(G, Ses) <= mz_constant * ||S|| * sq(E, es) + tol.
MzCheck mz_ratio_check(const MatrixOperator& S, const std::vector<Vec>& es, double p1, double p2,
                       double tol = 1e-8);

}  // namespace bex
